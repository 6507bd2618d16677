import random

import pytest

from alontarsi.classifier import (NOT_MEMBER, SPINDLE, T_GRAPH_EVEN, T_GRAPH_ODD, Classification,
                                  classify_connected, classify_degree_at, classify_two_connected,
                                  family_by_stretching, membership_d)
from alontarsi.graph import (MOSER_SPINDLE, SEED_K4, SEED_T222, Graph, GraphError, LabeledPair,
                             complete_graph, cycle_graph, glue, star_graph, t_graph, theta_graph)
from alontarsi.iso import canonical_form, enumerate_graphs, vertex_orbits
from alontarsi.orient import is_degree_at, is_pair_at

BOWTIE = glue(cycle_graph(3), cycle_graph(3), 0, 0)[0]
K4_MINUS_E = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def test_degree_at_examples():
    assert not classify_degree_at(cycle_graph(7)).at
    c = classify_degree_at(cycle_graph(6))
    assert c.at and c.witness == [0, 1, 2, 3, 4, 5]
    k4_triangle = glue(complete_graph(4), cycle_graph(3), 0, 0)[0]
    assert classify_degree_at(k4_triangle) == Classification(False, "gallai_tree", [[0, 1, 2, 3], [0, 4, 5]])
    with pytest.raises(GraphError):
        classify_degree_at(Graph(3, [(0, 1)]))


def test_membership_examples():
    g, x = SEED_K4
    m = membership_d(LabeledPair.marked(g, x))
    assert m.verdict == T_GRAPH_ODD and m.witness.path_lengths == (1, 1, 1)
    g, x = SEED_T222
    assert membership_d(LabeledPair.marked(g, x)).verdict == T_GRAPH_EVEN
    g, x = MOSER_SPINDLE
    m = membership_d(LabeledPair.marked(g, x))
    assert m.verdict == SPINDLE and m.witness[x] == x
    assert sorted(m.witness) == list(range(7))
    assert membership_d(LabeledPair.marked(t_graph((1, 2, 1)), 0)).verdict == NOT_MEMBER
    assert membership_d(LabeledPair.marked(g, 0)).verdict == NOT_MEMBER
    with pytest.raises(GraphError):
        membership_d(LabeledPair.marked(g, 0, 1))


def test_spindle_map_is_an_isomorphism():
    g, x = MOSER_SPINDLE
    rng = random.Random(0)
    perm = list(range(7))
    rng.shuffle(perm)
    h = g.relabel(perm)
    m = membership_d(LabeledPair.marked(h, perm[x]))
    assert m.verdict == SPINDLE
    assert h.relabel(m.witness) == g
    assert m.witness[perm[x]] == x


def test_two_connected_examples():
    c = classify_two_connected(LabeledPair.marked(K4_MINUS_E, 2))
    assert c.at and c.case_tag == "at"
    assert is_pair_at(LabeledPair.marked(K4_MINUS_E, 2)) is not None
    c = classify_two_connected(LabeledPair.marked(cycle_graph(5), 0))
    assert not c.at and c.case_tag == "degree_two_gallai"
    g, x = MOSER_SPINDLE
    assert classify_two_connected(LabeledPair.marked(g, x)).case_tag == "in_family"
    assert classify_two_connected(LabeledPair.marked(complete_graph(5), 0)).case_tag == "complete"
    with pytest.raises(GraphError):
        classify_two_connected(LabeledPair.marked(BOWTIE, 0))


def test_connected_examples():
    assert classify_connected(LabeledPair.marked(star_graph(3), 1)).case_tag == "gallai_tree"
    # C4 with a pendant vertex x
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0)])
    assert classify_connected(LabeledPair.marked(g, 4)).case_tag == "degree_one"
    assert classify_connected(LabeledPair.marked(BOWTIE, 0)).case_tag == "gallai_tree"
    # theta on C6 with a chord, plus x joined to two adjacent vertices of it
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (6, 1), (6, 2)])
    p = LabeledPair.marked(g, 6)
    assert classify_connected(p).at and is_pair_at(p) is not None
    with pytest.raises(GraphError):
        classify_connected(LabeledPair.marked(Graph(3, [(0, 1)]), 0))


def test_lobe_clauses():
    # x hangs off a C4 and carries two leaves: the non-Gallai lobe meets x in one edge
    g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 5), (4, 6)])
    assert classify_connected(LabeledPair.marked(g, 4)).case_tag == "lobe_degree_one"
    # x is the apex of a K4 seed with a triangle hanging off it
    seed, apex = SEED_T222
    g, _ = glue(seed, cycle_graph(3), apex, 0)
    assert classify_connected(LabeledPair.marked(g, apex)).case_tag == "lobe_block_in_family"
    # x of degree 2 in a C4 lobe whose remainder is a path
    g, _ = glue(cycle_graph(4), cycle_graph(3), 0, 0)
    assert classify_connected(LabeledPair.marked(g, 0)).case_tag == "lobe_degree_two"


def test_verdict_must_match_tag():
    with pytest.raises(ValueError):
        Classification(True, "gallai_tree")


@pytest.mark.parametrize("n", range(1, 7))
def test_degree_at_matches_oracle(n):
    for g in enumerate_graphs(n, "connected"):
        assert classify_degree_at(g).at == (is_degree_at(g) is not None)


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_matches_oracle(n):
    for g in enumerate_graphs(n, "connected"):
        for orb in vertex_orbits(g):
            p = LabeledPair.marked(g, orb[0])
            assert classify_connected(p).at == (is_pair_at(p, symmetry=True) is not None), (g, orb)


@pytest.mark.parametrize("n", range(3, 8))
def test_two_connected_agrees_with_connected(n):
    for g in enumerate_graphs(n, "two_connected"):
        for x in range(n):
            p = LabeledPair.marked(g, x)
            assert classify_two_connected(p).at == classify_connected(p).at


def test_family_members_are_not_at():
    fam = family_by_stretching(9, max_stretches=2)
    assert len(fam) >= 6
    for p, _ in fam:
        assert membership_d(p).member
        assert is_pair_at(p, symmetry=True) is None


def test_closed_form_matches_generated_family():
    fam = [p for p, _ in family_by_stretching(8)]
    members = {canonical_form(p.graph, list(p.labels)) for p in fam}
    sizes = {(p.graph.n, p.graph.m) for p in fam}
    for n in range(4, 9):
        for g in enumerate_graphs(n, "two_connected"):
            for x in range(n):
                p = LabeledPair.marked(g, x)
                if (g.n, g.m) not in sizes:
                    assert not membership_d(p).member, (g, x)
                    continue
                key = canonical_form(g, list(p.labels))
                assert membership_d(p).member == (key in members), (g, x)


@pytest.mark.parametrize("g", [theta_graph((1, 2, 3)), t_graph((1, 2, 2)), MOSER_SPINDLE[0],
                               glue(theta_graph((1, 2, 2)), complete_graph(4), 0, 0)[0],
                               glue(cycle_graph(4), cycle_graph(4), 1, 0)[0]])
def test_relabel_invariance(g):
    rng = random.Random(g.m)
    base = [classify_connected(LabeledPair.marked(g, x)) for x in range(g.n)]
    for _ in range(20):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        for x in range(g.n):
            c = classify_connected(LabeledPair.marked(h, perm[x]))
            assert (c.at, c.case_tag) == (base[x].at, base[x].case_tag)
