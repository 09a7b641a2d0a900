"""Exact arithmetic in the bicyclic monoid B = <p, q : qp = 1>.

Elements have the canonical form p^i q^j; multiplication cancels the inner
q^j p^k block.  Exponents are Python ints, so no overflow handling is needed.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Bicyclic:
    """p^i q^j in canonical form."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0:
            raise ValueError(f"exponents must be nonnegative, got ({self.i}, {self.j})")

    def __mul__(self, other: "Bicyclic") -> "Bicyclic":
        return bmul(self, other)

    def __str__(self) -> str:
        return f"p^{self.i} q^{self.j}"

    def as_dict(self) -> dict:
        return {"p": self.i, "q": self.j}

    @classmethod
    def from_dict(cls, data: dict) -> "Bicyclic":
        return cls(int(data["p"]), int(data["q"]))


IDENTITY = Bicyclic(0, 0)
P = Bicyclic(1, 0)
Q = Bicyclic(0, 1)


def bmul(x: Bicyclic, y: Bicyclic) -> Bicyclic:
    """Canonical product: p^i q^j * p^k q^l with the middle q^j p^k cancelled."""
    return Bicyclic(x.i + max(0, y.i - x.j), y.j + max(0, x.j - y.i))


def adjan_check(x: Bicyclic, y: Bicyclic) -> bool:
    """xy^2x * xy * xy^2x == xy^2x * yx * xy^2x, true for every x, y in B."""
    outer = x * y * y * x
    return outer * (x * y) * outer == outer * (y * x) * outer


def reduce_pq_string(text: str) -> Bicyclic:
    """String-rewriting oracle: cancel "qp" in a p/q word until none is left.

    The reduced word is always of the form p^i q^j; used by tests to
    cross-check bmul on exhaustive small inputs.
    """
    letters = list(text)
    if any(ch not in "pq" for ch in letters):
        raise ValueError(f"not a p/q string: {text!r}")
    changed = True
    while changed:
        changed = False
        for pos in range(len(letters) - 1):
            if letters[pos] == "q" and letters[pos + 1] == "p":
                del letters[pos:pos + 2]
                changed = True
                break
    i = letters.count("p")
    if letters != ["p"] * i + ["q"] * (len(letters) - i):
        raise AssertionError(f"reduction left a non-canonical word: {''.join(letters)}")
    return Bicyclic(i, len(letters) - i)
