import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chinese_monoid.bicyclic import IDENTITY, P, Q, Bicyclic
from chinese_monoid.core import eq_oracle, words_up_to
from chinese_monoid.representation import (Component, NotALeaf, NotAnArcStep,
                                           arc_element_image, arc_unit_tuple,
                                           build_representation,
                                           eq_via_embedding, identity_tuple,
                                           image, image_str,
                                           incomparability_witness,
                                           leaf_representations,
                                           representation_json, tuple_mul)
from chinese_monoid.tree import Diagram, enumerate_leaves, parse_id, tribonacci


def rep_for(leaf_id: str, n: int):
    return build_representation(parse_id(leaf_id, n))


# --- construction ------------------------------------------------------------

def test_dot_then_arc_leaf():
    rep = rep_for("d2 A", 3)
    assert [c.kind for c in rep.schema] == ["N", "B", "Z"]
    assert [c.origin for c in rep.schema] == [("dot", 2), ("arc", 1, 3), ("arc", 1, 3)]
    assert rep.image_of(1) == (0, P, 1)
    assert rep.image_of(2) == (1, IDENTITY, 0)
    assert rep.image_of(3) == (0, Q, 0)


def test_single_arc_leaf_with_free_generator():
    rep = rep_for("a2", 3)
    assert [c.kind for c in rep.schema] == ["B", "Z", "N"]
    assert rep.schema[2] == Component("N", ("free", 3))
    assert rep.image_of(1) == (P, 1, 0)
    assert rep.image_of(2) == (Q, 0, 0)
    assert rep.image_of(3) == (Q, 0, 1)


def test_schema_counts_balance():
    for n in range(3, 9):
        for rep in leaf_representations(n):
            assert rep.c + 2 * rep.d == n


def test_not_a_leaf():
    with pytest.raises(NotALeaf):
        build_representation(Diagram(4, (("d", 2),)))


def test_generator_image_invariants():
    # integer exponents of generator images are 0 or 1, and at most one
    # additive component of a single generator image is nonzero
    for n in range(3, 7):
        for rep in leaf_representations(n):
            for g in range(1, n + 1):
                additive = [entry for comp, entry in zip(rep.schema, rep.image_of(g))
                            if comp.kind != "B"]
                assert all(entry in (0, 1) for entry in additive)
                assert sum(additive) <= 1


# --- images ------------------------------------------------------------------

def test_image_examples():
    rep = rep_for("d2 A", 3)
    assert image(rep, (3, 2, 1)) == (1, IDENTITY, 1)
    assert image(rep, (1, 2, 3)) == (1, Bicyclic(1, 1), 1)
    assert image(rep, ()) == identity_tuple(rep.schema)


@settings(max_examples=40)
@given(st.lists(st.integers(1, 4), max_size=5).map(tuple),
       st.lists(st.integers(1, 4), max_size=5).map(tuple))
def test_image_is_a_homomorphism(w, v):
    for rep in leaf_representations(4):
        assert image(rep, w + v) == tuple_mul(rep.schema, image(rep, w), image(rep, v))


def test_defining_relations_preserved():
    for n in (3, 4):
        for rep in leaf_representations(n):
            for i in range(1, n + 1):
                for k in range(i, n + 1):
                    for j in range(k, n + 1):
                        a = image(rep, (j, i, k))
                        assert a == image(rep, (j, k, i)) == image(rep, (k, j, i))


def test_eq_via_embedding_examples():
    assert eq_via_embedding(3, (3, 2, 1), (2, 3, 1))
    assert not eq_via_embedding(3, (1, 2), (2, 1))
    assert eq_via_embedding(4, (1, 4, 2, 3), (1, 4, 2, 3))


def test_embedding_agrees_with_oracle_small():
    words = list(words_up_to(3, 3))
    for w, v in itertools.combinations(words, 2):
        assert eq_via_embedding(3, w, v) == eq_oracle(w, v)


# --- arc elements ------------------------------------------------------------

def test_arc_element_examples():
    rep = rep_for("a2", 3)
    assert arc_element_image(rep, (1, 2)) == (IDENTITY, 1, 0)
    rep2 = rep_for("d2 A", 3)
    assert arc_element_image(rep2, (1, 3)) == (0, IDENTITY, 1)


def test_arc_element_shape_everywhere():
    for n in range(3, 7):
        for rep in leaf_representations(n):
            for arc in rep.leaf.arcs:
                value = arc_element_image(rep, arc)
                assert value == arc_unit_tuple(rep, arc)
                assert all(entry == IDENTITY for comp, entry
                           in zip(rep.schema, value) if comp.kind == "B")


def test_arc_element_commutes_with_generators():
    for n in (3, 4):
        for rep in leaf_representations(n):
            for x, y in rep.leaf.arcs:
                for g in range(1, n + 1):
                    assert image(rep, (y, x, g)) == image(rep, (g, y, x))


def test_not_an_arc():
    rep = rep_for("a2", 3)
    with pytest.raises(NotAnArcStep):
        arc_element_image(rep, (1, 3))


def test_initial_dot_image_is_central():
    for n in (3, 4, 5):
        for rep in leaf_representations(n):
            if rep.leaf.steps[0][0] != "d":
                continue
            s = rep.leaf.steps[0][1]
            for g in range(1, n + 1):
                assert image(rep, (s, g)) == image(rep, (g, s))


# --- witnesses ---------------------------------------------------------------

def test_witness_example():
    r1 = rep_for("a2", 3)
    r2 = rep_for("a3", 3)
    w, v = incomparability_witness(r1, r2, 4)
    assert image(r1, w) == image(r1, v)
    assert image(r2, w) != image(r2, v)


def test_witness_search_is_deterministic():
    r1 = rep_for("a2", 3)
    r2 = rep_for("a3", 3)
    assert incomparability_witness(r1, r2, 4) == incomparability_witness(r1, r2, 4)


def test_witness_rejects_equal_representations():
    rep = rep_for("a2", 3)
    with pytest.raises(ValueError):
        incomparability_witness(rep, rep, 3)


def test_witness_not_found_returns_none():
    r1 = rep_for("a2", 4)
    r2 = rep_for("a4", 4)
    # length-1 words are separated by neither congruence
    assert incomparability_witness(r1, r2, 1) is None


# --- serialization -----------------------------------------------------------

def test_image_str_form():
    rep = rep_for("d2 A", 3)
    assert image_str(rep, image(rep, (1, 2, 3))) == "(N:1, B:p^1q^1, Z:1)"


def test_representation_json_shape():
    payload = representation_json(rep_for("a2", 3))
    assert payload["leaf"] == "a2"
    assert payload["schema"] == [
        {"kind": "B", "origin": "arc 1 2"},
        {"kind": "Z", "origin": "arc 1 2"},
        {"kind": "N", "origin": "free 3"},
    ]
    assert payload["images"]["1"] == [{"p": 1, "q": 0}, 1, 0]


def test_total_components_over_leaves():
    for n in (3, 4, 5, 6):
        total = sum(rep.c + 2 * rep.d for rep in leaf_representations(n))
        assert total == n * tribonacci(n)
