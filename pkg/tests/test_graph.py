import pytest

from alontarsi.graph import (MOSER_SPINDLE, SEED_T222, Graph, GraphError, LabeledPair, complete_bipartite,
                             complete_graph, cycle_graph, disjoint_union, glue, path_graph, star_graph,
                             t_graph, t_plus_graph, theta_graph)


def test_edges_are_normalised_and_indexed():
    g = Graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.edge_index(2, 0) == 1
    assert g.degrees == (2, 1, 1)
    assert g.has_edge(1, 0) and not g.has_edge(1, 2)


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(GraphError):
        Graph(3, edges)


def test_induced_and_removal_keep_order():
    g = cycle_graph(5)
    sub, keep = g.induced([4, 0, 1])
    assert keep == [0, 1, 4]
    assert sub.edges == ((0, 1), (0, 2))
    rest, keep = g.remove_vertices([2])
    assert keep == [0, 1, 3, 4] and rest.m == 3


def test_connectivity_predicates():
    assert path_graph(4).is_connected()
    assert not path_graph(4).is_two_connected()
    assert cycle_graph(4).is_two_connected()
    assert not complete_graph(2).is_two_connected()
    assert not disjoint_union(cycle_graph(3), cycle_graph(3)).is_connected()
    assert complete_graph(5).is_complete()


def test_named_graphs():
    assert complete_bipartite(2, 3).m == 6
    assert star_graph(3).degrees == (3, 1, 1, 1)
    th = theta_graph((1, 2, 3))
    assert (th.n, th.m) == (5, 6)
    t = t_graph((1, 2, 2))
    assert t.degree(0) == 3 and (t.n, t.m) == (6, 8)
    tp = t_plus_graph((1, 1, 1))
    assert (tp.n, tp.m) == (5, 9)


def test_seed_shapes():
    g, x = SEED_T222
    assert (g.n, g.m, g.degree(x)) == (7, 9, 3)
    s, x = MOSER_SPINDLE
    assert (s.n, s.m, s.degree(x)) == (7, 11, 4)
    assert sorted(s.degrees) == [3, 3, 3, 3, 3, 3, 4]


def test_glue_identifies_vertices():
    g, hmap = glue(cycle_graph(3), cycle_graph(3), 0, 0)
    assert (g.n, g.m) == (5, 6)
    assert hmap[0] == 0
    assert g.degree(0) == 4


def test_labeled_pair():
    p = LabeledPair.marked(cycle_graph(4), 2)
    assert p.is_hx() and p.x == 2
    assert p.degree_bound() == (2, 2, 1, 2)
    q = LabeledPair.marked(cycle_graph(4), 0, 2)
    assert not q.is_hx() and q.marked_vertices == [0, 2]
    with pytest.raises(GraphError):
        _ = q.x
    with pytest.raises(GraphError):
        LabeledPair(cycle_graph(3), (0, 0))
    with pytest.raises(GraphError):
        LabeledPair(cycle_graph(3), (0, -1, 0))


def test_relabel_preserves_structure():
    g = t_graph((1, 2, 3))
    h = g.relabel(list(reversed(range(g.n))))
    assert sorted(h.degrees) == sorted(g.degrees) and h.m == g.m
