import random

import pytest

from alontarsi.builders import (ConstructionError, _path_arcs, _t_arcs, apex_bound, build_added_path_orientation,
                                build_euler_lemma_orientation, build_t_orientation, build_t_plus_orientation,
                                build_theta_orientation, compose_cutvertex, extend_orientation,
                                stretch_orientation, stretch_transfer_check, t_witness_of)
from alontarsi.graph import (Graph, LabeledPair, complete_graph, cycle_graph, glue, t_graph, t_plus_graph,
                             theta_graph)
from alontarsi.iso import enumerate_graphs
from alontarsi.orient import Orientation, eulerian_counts, is_pair_at
from alontarsi.structure import detect_t_graph, detect_theta


@pytest.mark.parametrize("lengths", [(1, 2, 2), (2, 2, 2), (1, 2, 3), (3, 3, 3), (2, 3, 5)])
def test_theta_has_three_eulerian_subgraphs(lengths):
    g = theta_graph(lengths)
    w = detect_theta(g)
    for x in w.poles:
        d = build_theta_orientation(w, x, g)
        assert eulerian_counts(d).total == 3
        assert d.respects(apex_bound(g, x))


def test_theta_needs_a_pole():
    w = detect_theta(theta_graph((1, 2, 2)))
    with pytest.raises(ConstructionError):
        build_theta_orientation(w, 4)


@pytest.mark.parametrize("lengths", [(1, 1, 2), (1, 2, 2), (2, 3, 3), (1, 2, 3), (1, 1, 4)])
def test_mixed_t_graph_splits_three_to_one(lengths):
    g = t_graph(lengths)
    d = build_t_orientation(t_witness_of(g, 0), g)
    c = eulerian_counts(d)
    assert sorted((c.even, c.odd)) == [1, 3]
    assert d.respects(apex_bound(g, 0))


def test_equal_parity_t_graph_is_refused():
    with pytest.raises(ConstructionError):
        build_t_orientation(t_witness_of(t_graph((1, 3, 1)), 0))


@pytest.mark.parametrize("lengths", [(1, 1, 1), (2, 2, 2), (1, 2, 3), (3, 1, 1)])
def test_t_plus(lengths):
    g = t_plus_graph(lengths)
    w = detect_t_graph(g.remove_vertices([g.n - 1])[0], 0)
    d = build_t_plus_orientation(w, g.n - 1, g)
    assert eulerian_counts(d).is_at
    assert d.respects(apex_bound(g, 0))


@pytest.mark.parametrize("k", [4, 5, 6, 7])
def test_euler_lemma_on_complete_minus_edge(k):
    g = Graph(k, [e for e in complete_graph(k).edges if e != (0, 1)])
    d = build_euler_lemma_orientation(g, 0, 2, 1)
    c = eulerian_counts(d)
    assert c.even == c.odd + 1
    bound = [2] + list(g.degrees[1:])  # out-degree at most 1 at x
    assert d.respects(bound)
    if g.degree(0) >= 3:
        assert d.respects(apex_bound(g, 0))


def test_euler_lemma_hypotheses():
    g = Graph(5, [e for e in complete_graph(5).edges if e != (0, 1)])
    with pytest.raises(ConstructionError):
        build_euler_lemma_orientation(g, 0, 1, 2)  # x must be adjacent to z1
    with pytest.raises(ConstructionError):
        build_euler_lemma_orientation(cycle_graph(5), 0, 1, 3)  # closed neighbourhoods differ


@pytest.mark.parametrize("lengths,plen", [((3, 1, 1), 2), ((1, 3, 1), 3), ((2, 2, 2), 2), ((3, 3, 3), 4)])
def test_added_path(lengths, plen):
    g = t_graph(lengths)
    w = detect_t_graph(g, 0)
    path = max(w.paths, key=len)
    d = build_added_path_orientation(w, (path[0], path[1]), plen, g)
    assert abs(eulerian_counts(d).diff) == 1
    assert d.respects(apex_bound(d.graph, 0))
    assert is_pair_at(LabeledPair.marked(d.graph, 0)) is not None


def test_added_path_hypotheses():
    g = t_graph((2, 2, 2))
    w = detect_t_graph(g, 0)
    full = w.paths[0]
    with pytest.raises(ConstructionError):
        build_added_path_orientation(w, (full[0], full[-1]), 2, g)  # both ends have degree 3
    with pytest.raises(ConstructionError):
        build_added_path_orientation(w, (full[0], full[1]), 1, g)
    with pytest.raises(ConstructionError):
        build_added_path_orientation(detect_t_graph(t_graph((1, 2, 2)), 0), (0, 4), 2)


def test_added_path_inside_outgoing_apex_path_ties():
    # P inside the path that leaves x: the two new cycles cancel
    g = t_graph((3, 1, 1))
    w = detect_t_graph(g, 0)
    i = next(k for k, q in enumerate(w.paths) if len(q) == 4)
    a, b = w.paths[i][1], w.paths[i][2]
    g2 = g.add_edges([(a, g.n), (g.n, b)], n=g.n + 1)
    others = [k for k in range(3) if k != i]
    for p_prime in ([b, g.n, a], [a, g.n, b]):
        d = Orientation.from_arcs(g2, _t_arcs(w, others, i) + _path_arcs(p_prime))
        c = eulerian_counts(d)
        assert c.even == c.odd == 3


def test_compose_cutvertex_product():
    rng = random.Random(3)
    for _ in range(30):
        g1 = complete_graph(rng.randint(2, 4))
        g2 = cycle_graph(rng.randint(3, 6))
        d1 = Orientation(g1, tuple(rng.randint(0, 1) for _ in range(g1.m)))
        d2 = Orientation(g2, tuple(rng.randint(0, 1) for _ in range(g2.m)))
        d, c = compose_cutvertex(d1, d2, 0, 1)
        assert c.diff == eulerian_counts(d1).diff * eulerian_counts(d2).diff


def _random_connected(rng, n):
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.35:
                edges.add((u, v))
    return Graph(n, edges)


def test_subgraph_extension_keeps_at_with_x_inside():
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        g = _random_connected(rng, rng.randint(4, 7))
        x = rng.randrange(g.n)
        verts = sorted(rng.sample(range(g.n), rng.randint(2, g.n)))
        if x not in verts:
            continue
        sub_pair, keep = LabeledPair.marked(g, x).induced(verts)
        d = is_pair_at(sub_pair)
        if d is None:
            continue
        full = extend_orientation(g, keep, d)
        assert full.respects(apex_bound(g, x))
        assert eulerian_counts(full).diff == eulerian_counts(d).diff
        checked += 1


def test_subgraph_extension_with_x_outside():
    # C4 plus x joined to two cycle vertices and a pendant vertex
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (4, 5)])
    d = is_pair_at(LabeledPair(cycle_graph(4), (0,) * 4))
    full = extend_orientation(g, [0, 1, 2, 3], d, x=4)
    assert full.respects(apex_bound(g, 4))
    assert eulerian_counts(full).is_at


def test_x_outside_with_one_neighbour_in_the_component_fails():
    # x has degree 2 but only one neighbour in the subgraph's component of G - x
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 5)])
    h = LabeledPair(cycle_graph(4), (0,) * 4)
    assert is_pair_at(h) is not None
    assert is_pair_at(LabeledPair.marked(g, 4)) is None
    with pytest.raises(ConstructionError):
        extend_orientation(g, [0, 1, 2, 3], is_pair_at(h), x=4)


def test_stretch_orientation_preserves_difference():
    g = theta_graph((1, 2, 2))
    d = build_theta_orientation(detect_theta(g), 0, g)
    for e in range(g.m):
        s = stretch_orientation(d, e)
        assert eulerian_counts(s).diff == eulerian_counts(d).diff


@pytest.mark.parametrize("n", [3, 4])
def test_stretching_transfer(n):
    for g in enumerate_graphs(n, "connected"):
        for x in range(n):
            p = LabeledPair.marked(g, x)
            for e in range(g.m):
                assert stretch_transfer_check(p, e).holds
