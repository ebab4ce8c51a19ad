import numpy as np
import pytest

from bruric.hasse import (Graph, build_bruhat_graph, common_neighbor_counts, degree_report,
                          is_triangle_free, local_ball, max_triangle_pairs)

from conftest import hasse, table
from oracles import signed_covers


def test_a2_hasse_has_eight_edges():
    h = hasse("A", 2)
    assert len(h) == 6 and h.edge_count == 8
    assert sorted(h.degree.tolist()) == [2, 2, 3, 3, 3, 3]


@pytest.mark.parametrize("m", [2, 3, 4, 7])
def test_dihedral_hasse_is_complete_between_levels(m):
    h = hasse("I2", m=m)
    assert h.edge_count == 4 * m - 4
    lengths = h.lengths
    for u, v in h.edges().tolist():
        assert abs(lengths[u] - lengths[v]) == 1


def test_b4_degrees_against_length_oracle():
    g, h = table("B", 4), hasse("B", 4)
    expected = [len(set.union(*signed_covers(w, "B"))) for w in g.elements]
    assert h.degree.tolist() == expected
    assert h.max_degree == max(expected)


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4), ("H3", None)])
def test_degree_symmetric_under_longest_element(family, rank):
    g, h = table(family, rank), hasse(family, rank)
    w0 = g.left_multiplier(g.longest)
    assert np.array_equal(h.degree, h.degree[w0])


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("D", 4)])
def test_hasse_edges_join_adjacent_lengths(family, rank):
    h = hasse(family, rank)
    e = h.edges()
    assert np.all(np.abs(h.lengths[e[:, 0]] - h.lengths[e[:, 1]]) == 1)
    # graded, hence bipartite and triangle-free
    assert is_triangle_free(h)
    assert max_triangle_pairs(h) == 0


def test_bruhat_graph_edge_count():
    g = table("B", 3)
    b = build_bruhat_graph(g)
    assert b.edge_count == len(g) * len(g.reflections) // 2
    assert set(map(tuple, hasse("B", 3).edges().tolist())) <= set(map(tuple, b.edges().tolist()))
    # reflections flip length parity, so this graph is bipartite too
    assert is_triangle_free(b)


def test_degree_report():
    h = hasse("I2", m=4)
    rep = degree_report(h)
    assert rep.max_degree == 4
    assert rep.argmax_count == 2 and len(rep.argmax) == 2
    assert rep.histogram == {2: 2, 3: 4, 4: 2}
    assert rep.argmax_labels(h, cap=1) == [h.label(rep.argmax[0])]


def test_b5_argmax_contains_known_extremal():
    h = hasse("B", 5)
    rep = degree_report(h)
    labels = rep.argmax_labels(h, cap=None)
    assert rep.max_degree == 16
    assert "1,2,-5,-4,-3" in labels


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 0), (1, 2), (2, 2), (2, 0)])
    assert g.edge_count == 3
    assert g.adjacency == [(1, 2), (0, 2), (0, 1), ()]
    assert g.has_edge(2, 1) and not g.has_edge(3, 0)
    assert common_neighbor_counts(g).tolist() == [1, 1, 1]
    assert max_triangle_pairs(g) == 1
    assert g.relabeled([3, 2, 1, 0]).adjacency[3] == (1, 2)
    assert Graph.from_adjacency({0: [1], 1: [0, 2]}).edge_count == 2


def test_local_ball_of_a_path():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    ball = local_ball(g, 2)
    assert ball.ring1 == (1, 3) and ball.ring2 == (0, 4)
    assert ball.cross == {0: (1,), 4: (3,)}
    assert ball.ring1_edges == ()
    assert ball.degree == {2: 2, 1: 2, 3: 2}
    assert ball.vertices == (2, 1, 3, 0, 4)


def test_local_ball_records_ring1_edges():
    g = Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    ball = local_ball(g, 0)
    assert ball.ring1_edges == ((1, 2),)
    assert ball.ring2 == (3,) and ball.cross[3] == (2,)
