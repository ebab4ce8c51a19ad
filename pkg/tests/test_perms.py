from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bruric.errors import InvalidElement, OddSigns
from bruric.perms import (Reflection, a_cover_transpositions, b_cover_reflections,
                          check_window, cover_neighbors, cover_neighbors_a, cover_neighbors_b,
                          cover_neighbors_d, d_cover_reflections, format_window, parse_window)

from conftest import hasse, table
from oracles import s_n_covers, signed_covers, signed_leq, signed_length


@st.composite
def windows(draw, family, n_min=2, n_max=8):
    n = draw(st.integers(n_min, n_max))
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    w = [-v if s else v for v, s in zip(perm, signs)]
    if family == "D" and sum(signs) % 2:
        w[0] = -w[0]
    return tuple(w)


def test_parse_and_format():
    assert parse_window("4,-3,2,-1") == (4, -3, 2, -1)
    assert parse_window(" [1, 2,-3] ") == (1, 2, -3)
    assert format_window((1, -2)) == "[1,-2]"
    for bad in ("", "1,,2", "a,b", "1;2"):
        with pytest.raises(InvalidElement):
            parse_window(bad)


def test_window_validation():
    with pytest.raises(InvalidElement):
        check_window((1, 1))
    with pytest.raises(InvalidElement):
        check_window((0, 1))
    with pytest.raises(OddSigns):
        check_window((-1, 2, 3), "D")
    assert check_window([-1, -2, 3], "D") == (-1, -2, 3)


def test_reflection_strings_and_action():
    assert str(Reflection.pair(2, 3)) == "(2,3)(-2,-3)"
    assert str(Reflection.negpair(1, 2)) == "(1,-2)(-1,2)"
    assert str(Reflection.sign(4)) == "(4,-4)"
    w = (4, -3, 2, -1)
    assert Reflection.sign(4).apply(w) == (-4, -3, 2, -1)
    assert Reflection.negpair(1, 2).apply(w) == (4, -3, -1, 2)
    assert Reflection.pair(2, 3).apply(Reflection.pair(2, 3).apply(w)) == w


def test_b4_example_union_of_covers():
    # [REF] the twelve reflections listed around [4,-3,2,-1]
    listed = {Reflection.sign(4), Reflection.sign(2), Reflection.pair(2, 3),
              Reflection.pair(1, 3), Reflection.negpair(1, 2), Reflection.negpair(3, 4),
              Reflection.sign(3), Reflection.sign(1), Reflection.pair(3, 4),
              Reflection.pair(2, 4), Reflection.pair(1, 2), Reflection.negpair(2, 3)}
    up, down = b_cover_reflections((4, -3, 2, -1))
    assert set(up) | set(down) == listed
    assert len(up) == len(down) == 6


def test_b4_example_split_follows_lengths():
    # [DERIVED] the up/down split is decided by the length formula
    w = (4, -3, 2, -1)
    up, down = b_cover_reflections(w)
    lw = signed_length(w, "B")
    assert all(signed_length(r.apply(w), "B") == lw + 1 for r in up)
    assert all(signed_length(r.apply(w), "B") == lw - 1 for r in down)
    assert {Reflection.negpair(2, 3), Reflection.pair(1, 2), Reflection.pair(3, 4)} <= set(up)


def test_d4_example_covers():
    # [DERIVED] both the rule and the length oracle give seven neighbours
    w = (2, -3, -4, 1)
    up, down = cover_neighbors_d(w)
    assert (up, down) == signed_covers(w, "D")
    assert len(up) + len(down) == 7


def test_type_a_against_tableau_oracle():
    for n in (3, 4, 5):
        elements = list(permutations(range(1, n + 1)))
        for pi in elements:
            up, down = cover_neighbors_a(pi)
            assert up == s_n_covers(pi, elements)
            assert all(pi in s_n_covers(v, elements) for v in down)


def test_a_cover_transpositions_sorted():
    up, down = a_cover_transpositions((2, 1, 3))
    assert up == [(1, 3), (2, 3)] and down == [(1, 2)]


@pytest.mark.parametrize("n", [2, 3])
def test_type_b_against_s2n_embedding(n):
    g = table("B", n)
    for w in g.elements:
        up, _ = cover_neighbors_b(w)
        lw = signed_length(w, "B")
        expected = {v for v in g.elements
                    if signed_length(v, "B") == lw + 1 and signed_leq(w, v)}
        assert up == expected


@pytest.mark.parametrize("family,rank", [("A", 4), ("B", 4), ("D", 4), ("D", 5)])
def test_window_rules_match_generic_covers(family, rank):
    g = table(family, rank)
    h = hasse(family, rank)
    for i, w in enumerate(g.elements):
        up, down = cover_neighbors(w, family)
        assert {g.index[v] for v in up | down} == set(h.adjacency[i])


@settings(max_examples=300, deadline=None)
@given(windows("B"))
def test_type_b_rule_matches_length_oracle(w):
    assert cover_neighbors_b(w) == signed_covers(w, "B")


@settings(max_examples=300, deadline=None)
@given(windows("D", n_min=3))
def test_type_d_rule_matches_length_oracle(w):
    assert cover_neighbors_d(w) == signed_covers(w, "D")


@settings(max_examples=100, deadline=None)
@given(windows("B", n_max=7))
def test_up_and_down_are_mutually_consistent(w):
    up, down = cover_neighbors_b(w)
    assert all(w in cover_neighbors_b(v)[1] for v in up)
    assert all(w in cover_neighbors_b(v)[0] for v in down)


def test_d_reflections_exclude_sign_changes():
    up, down = d_cover_reflections((1, 2, 3))
    assert all(r.kind != "sign" for r in up + down)
    assert cover_neighbors((1, 2, 3), "D")[0] == {(2, 1, 3), (1, 3, 2), (-2, -1, 3)}
