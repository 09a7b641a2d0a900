"""Core arithmetic of the Chinese monoid of rank n.

The monoid is generated by a_1, ..., a_n subject to the length-3 relations

    a_j a_i a_k = a_j a_k a_i = a_k a_j a_i   for i <= k <= j.

Words are plain tuples of generator indices (1-based); the empty tuple is
the identity.  Equality is decided by a breadth-first closure of the
relations (`congruence_class`, `eq_oracle`), and every class contains a
unique word matching the triangular "staircase" pattern

    b_1 b_2 ... b_n,   b_r = (a_r a_1)^k[r][1] (a_r a_2)^k[r][2] ... a_r^k[r][r],

which serves as the canonical form (`to_staircase`).  The closure is the
correctness oracle for everything else in the package: it is slow but
correct by construction at desk scale.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Word = tuple[int, ...]
CongruencePairs = frozenset[tuple[Word, Word]]

NO_EXTRA: CongruencePairs = frozenset()

#: Default breadth-first cap: bounds memory while covering the whole
#: verification battery.
DEFAULT_CAP = 200_000


class ClassCapExceeded(Exception):
    """The breadth-first closure grew past the requested cap."""


class NoStaircaseMember(Exception):
    """A congruence class contains no staircase word (canonical-form bug)."""


class MultipleStaircaseMembers(Exception):
    """A congruence class contains several staircase words (canonical-form bug)."""


class IndexConstraintViolated(Exception):
    """Indices handed to a relation or congruence builder break its constraints."""


class WordSyntaxError(ValueError):
    """Unparseable word text, or a letter outside 1..n."""


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def parse_word(text: str, n: int) -> Word:
    """Parse a word over generators 1..n.

    Two syntaxes are accepted: whitespace-separated indices ("3 2 1") and
    the compact letter form ("cba", a=1..z=26, only meaningful for n <= 26).
    The empty string is the identity.
    """
    if n < 1:
        raise WordSyntaxError(f"rank must be >= 1, got {n}")
    text = text.strip()
    if not text:
        return ()
    tokens = text.split()
    if all(tok.isdigit() for tok in tokens):
        letters = tuple(int(tok) for tok in tokens)
    elif len(tokens) == 1 and tokens[0].isalpha() and tokens[0].islower():
        letters = tuple(ord(ch) - ord("a") + 1 for ch in tokens[0])
    else:
        raise WordSyntaxError(f"cannot parse word {text!r}")
    for x in letters:
        if not 1 <= x <= n:
            raise WordSyntaxError(f"letter {x} outside 1..{n} in word {text!r}")
    return letters


def format_word(word: Word) -> str:
    """Numeric text form; the empty word renders as the empty string."""
    return " ".join(str(x) for x in word)


def words_up_to(n: int, max_len: int) -> Iterator[Word]:
    """All words over 1..n of length 0..max_len, shortest first, lexicographic."""
    for length in range(max_len + 1):
        yield from itertools.product(range(1, n + 1), repeat=length)


# ---------------------------------------------------------------------------
# Rewriting and the breadth-first congruence oracle
# ---------------------------------------------------------------------------

def _window_rewrites(x: int, y: int, z: int) -> set[tuple[int, int, int]]:
    # The relation class of i <= k <= j has member words
    # (j,i,k), (j,k,i), (k,j,i); match the window against each role.
    out: set[tuple[int, int, int]] = set()
    if y <= z <= x:  # window is (j,i,k)
        out.add((x, z, y))
        out.add((z, x, y))
    if z <= y <= x:  # window is (j,k,i)
        out.add((x, z, y))
        out.add((y, x, z))
    if z <= x <= y:  # window is (k,j,i)
        out.add((y, z, x))
        out.add((y, x, z))
    out.discard((x, y, z))
    return out


def rewrite_neighbors(word: Word) -> set[Word]:
    """All words one defining-relation rewrite away from `word` (either
    direction, any position).  The word itself is excluded."""
    out: set[Word] = set()
    for pos in range(len(word) - 2):
        x, y, z = word[pos], word[pos + 1], word[pos + 2]
        tail = word[pos + 3:]
        head = word[:pos]
        for window in _window_rewrites(x, y, z):
            out.add(head + window + tail)
    out.discard(word)
    return out


def _oriented_substitutions(extra: Iterable[tuple[Word, Word]]) -> list[tuple[Word, Word]]:
    subs = []
    for u, v in extra:
        if len(u) != len(v):
            raise ValueError(f"inhomogeneous congruence pair ({u}, {v})")
        if u == v:
            continue
        subs.append((u, v))
        subs.append((v, u))
    return subs


def _substitute_all(word: Word, u: Word, v: Word) -> Iterator[Word]:
    k = len(u)
    for pos in range(len(word) - k + 1):
        if word[pos:pos + k] == u:
            yield word[:pos] + v + word[pos + k:]


def congruence_class(word: Word, extra: CongruencePairs = NO_EXTRA,
                     cap: int = DEFAULT_CAP) -> set[Word]:
    """Breadth-first closure of `word` under the defining relations plus the
    `extra` pairs (substituted in both directions at every position).

    All members have the length of `word`.  Raises ClassCapExceeded once more
    than `cap` words have been generated.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    subs = _oriented_substitutions(extra)
    seen: set[Word] = {word}
    queue: deque[Word] = deque((word,))
    while queue:
        w = queue.popleft()
        fresh: list[Word] = []
        for nb in rewrite_neighbors(w):
            if nb not in seen:
                fresh.append(nb)
        for u, v in subs:
            for nb in _substitute_all(w, u, v):
                if nb not in seen:
                    fresh.append(nb)
        for nb in fresh:
            if nb not in seen:
                seen.add(nb)
                if len(seen) > cap:
                    raise ClassCapExceeded(
                        f"congruence class of {format_word(word)!r} exceeds cap {cap}")
                queue.append(nb)
    return seen


def eq_oracle(w: Word, v: Word, extra: CongruencePairs = NO_EXTRA,
              cap: int = DEFAULT_CAP) -> bool:
    """Decide w = v modulo the Chinese relations and `extra`.

    Congruences here are homogeneous, so words of different lengths are
    unequal without running the closure.
    """
    if len(w) != len(v):
        return False
    if w == v:
        return True
    return v in congruence_class(w, extra, cap)


# ---------------------------------------------------------------------------
# Staircase canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StaircaseForm:
    """Triangular exponent array of the canonical form.

    Row i (1-based, stored at k[i-1]) holds k[i][1..i]: exponent of the pair
    a_i a_j at position j < i and of the single letter a_i at position i.
    """

    n: int
    k: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")
        if len(self.k) != self.n:
            raise ValueError("exponent triangle has wrong number of rows")
        for i, row in enumerate(self.k, start=1):
            if len(row) != i:
                raise ValueError(f"row {i} must have {i} entries")
            if any(e < 0 for e in row):
                raise ValueError("exponents must be nonnegative")

    @classmethod
    def identity(cls, n: int) -> "StaircaseForm":
        return cls(n, tuple(tuple(0 for _ in range(i + 1)) for i in range(n)))

    def expand(self) -> Word:
        """The canonical word b_1 b_2 ... b_n this triangle encodes."""
        out: list[int] = []
        for r in range(1, self.n + 1):
            row = self.k[r - 1]
            for j in range(1, r):
                out.extend((r, j) * row[j - 1])
            out.extend((r,) * row[r - 1])
        return tuple(out)

    def weight(self) -> int:
        """Weighted degree: off-diagonal exponents count twice.  Equals the
        length of the expanded word."""
        total = 0
        for i, row in enumerate(self.k, start=1):
            for j, e in enumerate(row, start=1):
                total += e if i == j else 2 * e
        return total

    def as_dict(self) -> dict:
        return {"n": self.n, "k": [list(row) for row in self.k]}

    @classmethod
    def from_dict(cls, data: dict) -> "StaircaseForm":
        return cls(int(data["n"]), tuple(tuple(int(e) for e in row) for row in data["k"]))


def decode_staircase(word: Word, n: int) -> tuple[tuple[int, ...], ...] | None:
    """Read `word` as a staircase expansion, or return None if it is not one.

    The expansion grammar is unambiguous: inside block r the pairs (r, j)
    appear with j ascending, single letters r come last, and block r+1 starts
    with a letter > r.
    """
    rows = [[0] * (i + 1) for i in range(n)]
    pos = 0
    size = len(word)
    for r in range(1, n + 1):
        for j in range(1, r):
            while pos + 1 < size and word[pos] == r and word[pos + 1] == j:
                rows[r - 1][j - 1] += 1
                pos += 2
        while pos < size and word[pos] == r:
            rows[r - 1][r - 1] += 1
            pos += 1
    if pos != size:
        return None
    return tuple(tuple(row) for row in rows)


# Normal forms are pure values; computing one normalizes its whole class, so
# the cache is filled class-at-a-time.  The cap is a resource bound, not part
# of the value, hence not a cache key.
_NF_CACHE: dict[tuple[int, Word], StaircaseForm] = {}


def to_staircase(word: Word, n: int, cap: int = DEFAULT_CAP) -> StaircaseForm:
    """Canonical form of `word` in the Chinese monoid of rank n.

    Computed as the unique staircase word in the breadth-first class.  Zero or
    several staircase members would falsify canonical-form uniqueness on this
    instance, so both abort loudly.
    """
    for x in word:
        if not 1 <= x <= n:
            raise WordSyntaxError(f"letter {x} outside 1..{n}")
    cached = _NF_CACHE.get((n, word))
    if cached is not None:
        return cached
    cls = congruence_class(word, cap=cap)
    matches = []
    for member in cls:
        rows = decode_staircase(member, n)
        if rows is not None:
            matches.append(rows)
    if not matches:
        raise NoStaircaseMember(
            f"class of {format_word(word)!r} has no staircase member")
    if len(matches) > 1:
        raise MultipleStaircaseMembers(
            f"class of {format_word(word)!r} has {len(matches)} staircase members")
    form = StaircaseForm(n, matches[0])
    for member in cls:
        _NF_CACHE[(n, member)] = form
    return form


def multiply(f: StaircaseForm, g: StaircaseForm, cap: int = DEFAULT_CAP) -> StaircaseForm:
    """Product of canonical forms: concatenate expansions, renormalize."""
    if f.n != g.n:
        raise ValueError(f"rank mismatch: {f.n} != {g.n}")
    return to_staircase(f.expand() + g.expand(), f.n, cap)


def count_classes(n: int, length: int) -> int:
    """Number of staircase forms of rank n and weighted degree `length`.

    Counts exponent triangles directly: n diagonal cells of weight 1 and
    n(n-1)/2 off-diagonal cells of weight 2.
    """
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    if length < 0:
        raise ValueError("length must be >= 0")
    ways = [0] * (length + 1)
    ways[0] = 1
    cells = [1] * n + [2] * (n * (n - 1) // 2)
    for weight in cells:
        for t in range(weight, length + 1):
            ways[t] += ways[t - weight]
    return ways[length]


# ---------------------------------------------------------------------------
# First-level congruences and the two-sided annihilation identities
# ---------------------------------------------------------------------------

def first_level_pairs(kind: str, s: int, n: int) -> CongruencePairs:
    """Generating pairs of the first-level congruence attached to a dot or arc.

    kind "dot" (2 <= s <= n-1): the generators a_1..a_s commute pairwise and
    a_s..a_n commute pairwise; modulo these pairs a_s is central.

    kind "arc" (2 <= s <= n): a_1..a_{s-1} commute, a_s..a_n commute, and the
    mixed triples (a_i a_{s-1} a_m, a_m a_{s-1} a_i) for s <= m, i and
    (a_l a_s a_m, a_m a_s a_l) for l, m <= s-1 are identified; modulo these
    pairs the product a_s a_{s-1} is central.
    """
    if n < 3:
        raise IndexConstraintViolated(f"rank must be >= 3, got {n}")
    pairs: set[tuple[Word, Word]] = set()

    def commutators(lo: int, hi: int) -> None:
        for x in range(lo, hi + 1):
            for y in range(x + 1, hi + 1):
                pairs.add(((y, x), (x, y)))

    if kind == "dot":
        if not 2 <= s <= n - 1:
            raise IndexConstraintViolated(f"dot index s={s} outside 2..{n - 1}")
        commutators(1, s)
        commutators(s, n)
    elif kind == "arc":
        if not 2 <= s <= n:
            raise IndexConstraintViolated(f"arc index s={s} outside 2..{n}")
        commutators(1, s - 1)
        commutators(s, n)
        for i in range(s, n + 1):
            for m in range(i + 1, n + 1):
                pairs.add(((m, s - 1, i), (i, s - 1, m)))
        for l in range(1, s):
            for m in range(l + 1, s):
                pairs.add(((m, s, l), (l, s, m)))
    else:
        raise IndexConstraintViolated(f"kind must be 'dot' or 'arc', got {kind!r}")
    return frozenset(pairs)


def verify_boxplus(n: int, variant: int, w: Word, *, i: int, j: int,
                   l: int, k: int | None = None, m: int | None = None,
                   cap: int = DEFAULT_CAP) -> bool:
    """Check one instance of the two-sided annihilation identities.

    Variant 22 (indices i > j >= k > l):
        the normal forms of  a_i a_j w a_k a_l  and  a_j a_i w a_l a_k
        form the same multiset as those of  a_i a_j w a_l a_k  and
        a_j a_i w a_k a_l.
    Variant 23 appends a_m (i >= j+1 > j >= m > l, k forced to j+1);
    variant 32 prepends a_m (i > m >= j+1 > j >= l, k forced to j+1).
    """
    for x in (i, j, l) + (() if k is None else (k,)) + (() if m is None else (m,)) + w:
        if not 1 <= x <= n:
            raise IndexConstraintViolated(f"index {x} outside 1..{n}")
    if variant == 22:
        if k is None:
            raise IndexConstraintViolated("variant 22 needs k")
        if m is not None:
            raise IndexConstraintViolated("variant 22 takes no m")
        if not (i > j >= k > l):
            raise IndexConstraintViolated(f"need i > j >= k > l, got {(i, j, k, l)}")
        prefix: Word = ()
        suffix: Word = ()
    elif variant == 23:
        if m is None:
            raise IndexConstraintViolated("variant 23 needs m")
        if k is None:
            k = j + 1
        if k != j + 1:
            raise IndexConstraintViolated(f"variant 23 forces k = j+1, got k={k}")
        if not (i >= j + 1 and j >= m > l):
            raise IndexConstraintViolated(f"need i >= j+1 > j >= m > l, got {(i, j, m, l)}")
        prefix, suffix = (), (m,)
    elif variant == 32:
        if m is None:
            raise IndexConstraintViolated("variant 32 needs m")
        if k is None:
            k = j + 1
        if k != j + 1:
            raise IndexConstraintViolated(f"variant 32 forces k = j+1, got k={k}")
        if not (i > m >= j + 1 and j >= l):
            raise IndexConstraintViolated(f"need i > m >= j+1 > j >= l, got {(i, m, j, l)}")
        prefix, suffix = (m,), ()
    else:
        raise IndexConstraintViolated(f"variant must be one of 22, 23, 32, got {variant}")

    def nf(word: Word) -> StaircaseForm:
        return to_staircase(word, n, cap)

    pos1 = nf(prefix + (i, j) + w + (k, l) + suffix)
    pos2 = nf(prefix + (j, i) + w + (l, k) + suffix)
    neg1 = nf(prefix + (i, j) + w + (l, k) + suffix)
    neg2 = nf(prefix + (j, i) + w + (k, l) + suffix)
    return sorted([pos1.k, pos2.k]) == sorted([neg1.k, neg2.k])


def boxplus_tuples(n: int, variant: int) -> Iterator[dict[str, int]]:
    """All admissible index tuples of a variant, as kwargs for verify_boxplus."""
    if variant == 22:
        for j in range(2, n + 1):
            for i in range(j + 1, n + 1):
                for k in range(2, j + 1):
                    for l in range(1, k):
                        yield {"i": i, "j": j, "k": k, "l": l}
    elif variant == 23:
        for j in range(2, n):
            for i in range(j + 1, n + 1):
                for m in range(2, j + 1):
                    for l in range(1, m):
                        yield {"i": i, "j": j, "m": m, "l": l}
    elif variant == 32:
        for j in range(1, n - 1):
            for m in range(j + 1, n + 1):
                for i in range(m + 1, n + 1):
                    for l in range(1, j + 1):
                        yield {"i": i, "j": j, "m": m, "l": l}
    else:
        raise IndexConstraintViolated(f"variant must be one of 22, 23, 32, got {variant}")
