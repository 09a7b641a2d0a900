import pytest

from chinese_monoid.tree import (Diagram, MalformedDiagram, RankTooSmall,
                                 children, enumerate_leaves, parse_ascii,
                                 parse_id, render, render_ascii,
                                 steps_from_marks, tribonacci, u_sequence)


# --- integer sequences -----------------------------------------------------

def test_tribonacci_values():
    assert [tribonacci(k) for k in range(11)] == [1, 1, 1, 3, 5, 9, 17, 31, 57, 105, 193]
    assert tribonacci(12) == 653


def test_u_sequence_values():
    assert u_sequence(0) == 1
    assert u_sequence(3) == 3
    assert u_sequence(4) == 5


def test_u_sequence_matches_tribonacci():
    for k in range(21):
        assert u_sequence(k) == tribonacci(k)
    for k in range(3, 21):
        assert u_sequence(k + 1) == u_sequence(k) + u_sequence(k - 1) + u_sequence(k - 2)


# --- tree structure ----------------------------------------------------------

def test_root_children_counts():
    assert len(children(Diagram(4))) == 5
    for n in range(3, 9):
        assert len(children(Diagram(n))) == 2 * n - 3


def test_initial_dot_forces_arc():
    d2 = Diagram(3, (("d", 2),))
    kids = children(d2)
    assert [k.id for k in kids] == ["d2 A"]
    assert kids[0].arcs == ((1, 3),)


def test_leaf_has_no_children():
    leaf = Diagram(3, (("a", 2),))
    assert leaf.is_leaf
    assert children(leaf) == []


def test_enumerate_leaves_small_ranks():
    assert [d.id for d in enumerate_leaves(3)] == ["d2 A", "a2", "a3"]
    assert [d.id for d in enumerate_leaves(4)] == ["d2 A", "d3 A", "a2", "a3 A", "a4"]
    assert len(enumerate_leaves(5)) == 9


def test_leaf_counts_match_tribonacci():
    for n in range(3, 10):
        assert len(enumerate_leaves(n)) == tribonacci(n)


def test_leaf_ids_are_unique():
    for n in range(3, 9):
        ids = [d.id for d in enumerate_leaves(n)]
        assert len(ids) == len(set(ids))


def test_used_interval_is_contiguous_and_single_use():
    for n in range(3, 8):
        for leaf in enumerate_leaves(n):
            used = sorted(set(leaf.dots) | {g for x, y in leaf.arcs for g in (x, y)})
            assert used == list(range(used[0], used[-1] + 1))
            assert len(leaf.dots) + 2 * len(leaf.arcs) == len(used)


def test_extreme_generators_only_in_arcs():
    for n in range(3, 8):
        for leaf in enumerate_leaves(n):
            assert 1 not in leaf.dots and n not in leaf.dots
            x, y = leaf.arcs[-1]
            assert x == 1 or y == n


def test_rank_too_small():
    with pytest.raises(RankTooSmall):
        enumerate_leaves(2)
    with pytest.raises(RankTooSmall):
        Diagram(2)


def test_malformed_sequences():
    with pytest.raises(MalformedDiagram):
        Diagram(3, (("d", 1),))          # dots never sit on generator 1
    with pytest.raises(MalformedDiagram):
        Diagram(3, (("a", 1),))
    with pytest.raises(MalformedDiagram):
        Diagram(3, (("d", 2), "L"))      # after an initial dot only an arc
    with pytest.raises(MalformedDiagram):
        Diagram(5, (("a", 4), "L", "R"))  # no side switch after a dot
    with pytest.raises(MalformedDiagram):
        Diagram(3, (("a", 2), "A"))      # nothing follows an extreme arc
    with pytest.raises(MalformedDiagram):
        Diagram(4, (("a", 2), "R"))      # (a,2) is already extreme
    with pytest.raises(MalformedDiagram):
        Diagram(4, (("d", 2), "X"))


def test_parse_id_roundtrip():
    for n in range(3, 8):
        for leaf in enumerate_leaves(n):
            assert parse_id(leaf.id, n) == leaf
    assert parse_id("root", 4).is_root
    with pytest.raises(MalformedDiagram):
        parse_id("z9", 4)
    with pytest.raises(MalformedDiagram):
        parse_id("d2 Q", 4)


# --- rendering ---------------------------------------------------------------

def test_render_ascii_single_arc():
    assert render_ascii(Diagram(3, (("a", 2),))) == \
        "╭─╮\n● ● ○\n1 2 3"


def test_render_ascii_arc_over_dot():
    drawing = render_ascii(Diagram(3, (("d", 2), "A")))
    assert drawing.split("\n") == [
        "╭───╮",
        "● ● ●",
        "1 2 3",
    ]


def test_render_roundtrip_through_drawing():
    for n in range(3, 7):
        for leaf in enumerate_leaves(n):
            got_n, dots, arcs = parse_ascii(render_ascii(leaf))
            assert got_n == n
            assert steps_from_marks(got_n, dots, arcs) == leaf.steps


def test_steps_from_marks_rejects_impossible_marks():
    with pytest.raises(MalformedDiagram):
        steps_from_marks(4, {2, 3}, [])          # several dots, no arc
    with pytest.raises(MalformedDiagram):
        steps_from_marks(5, set(), [(1, 3), (2, 5)])  # arcs cross
    with pytest.raises(MalformedDiagram):
        steps_from_marks(5, {2, 4}, [(1, 5), (2, 4)])  # arc endpoints dotted


def test_render_dot_of_root():
    text = render(Diagram(3), "dot")
    assert text.startswith("digraph")
    assert text.count("label=") == 5  # root + first level (3) + one leaf below d2
    assert '"d2" -> "d2 A"' in text


def test_render_rejects_unknown_format():
    with pytest.raises(ValueError):
        render(Diagram(3), "png")
