import json

import pytest

from alontarsi.config import GuardError
from alontarsi.graph import SPLIT_G1, SPLIT_G2, Graph, theta_graph
from alontarsi.graph6 import emit_graph6
from alontarsi.iso import canonical_form
from alontarsi.sweeps import builder_suite, is_unstretched, pair_orbits, search_two_marked, verify


def _keys(cat):
    from alontarsi.graph6 import parse_graph6

    out = set()
    for e in cat.entries:
        g = parse_graph6(e["graph6"])
        x, y = e["pair"]
        out.add(canonical_form(g, [int(v in (x, y)) for v in range(g.n)]))
    return out


def _key(g, pair):
    return canonical_form(g, [int(v in pair) for v in range(g.n)])


@pytest.mark.parametrize("scope,n", [("degree_at", 5), ("main_lemma", 5), ("thm_1connected", 5),
                                     ("hx_equivalence", 4), ("lemma_suite", 3)])
def test_small_sweeps_are_clean(scope, n):
    rep = verify(scope, n)
    assert rep.ok and rep.counts["instances"] > 0
    js = rep.to_json()
    assert js["ok"] and js["scope"] == scope and "MAX_SEARCH_EDGES" in js["config"]


def test_sweep_guards():
    with pytest.raises(GuardError):
        verify("hx_equivalence", 7)
    with pytest.raises(ValueError):
        verify("everything", 3)


def test_checkpoint_resume(tmp_path):
    ck = tmp_path / "ck.json"
    first = verify("main_lemma", 5, checkpoint=str(ck))
    saved = json.loads(ck.read_text())
    assert len(saved) == first.counts["graphs"]
    again = verify("main_lemma", 5, checkpoint=str(ck))
    assert again.counts == first.counts and again.mismatches == first.mismatches


def test_parallel_matches_serial():
    a = verify("thm_1connected", 5, jobs=1)
    b = verify("thm_1connected", 5, jobs=2)
    assert a.counts == b.counts and a.histogram == b.histogram


def test_builder_suite_sizes():
    recs = builder_suite()
    per = {}
    for r in recs:
        per[r["tag"]] = per.get(r["tag"], 0) + 1
        assert r["classifier"] == r["oracle"], r
    for name in ("theta", "t_graph", "euler_lemma", "added_path"):
        assert per[name] >= 10
    assert per["cutvertex"] == 100


def test_unstretched():
    assert is_unstretched(Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))
    # poles joined by an edge: the path through two degree-2 vertices is not induced
    assert is_unstretched(theta_graph((1, 3, 3)))
    assert not is_unstretched(theta_graph((2, 3, 3)))


def test_pair_orbits_partition_pairs():
    g = theta_graph((2, 2, 2))
    orbits = pair_orbits(g)
    flat = sorted(p for orb in orbits for p in orb)
    assert flat == sorted((x, y) for x in range(g.n) for y in range(x + 1, g.n))
    assert len(orbits) == 3


def test_k23_is_in_the_at_catalog():
    cat = search_two_marked(5, "at")
    g, pair = SPLIT_G2
    assert _key(g, pair) in _keys(cat)
    assert cat.totals()["pair_orbits"] == len(cat.entries)


def test_split_graph_separates_paint_from_choose():
    g, pair = SPLIT_G1
    paint = search_two_marked(5, "paintable")
    choose = search_two_marked(5, "choosable")
    assert _key(g, pair) in _keys(paint)
    assert _key(g, pair) not in _keys(choose)
    assert _keys(choose) <= _keys(paint)


def test_search_is_reproducible():
    a = search_two_marked(6, "at")
    b = search_two_marked(6, "at")
    assert a.entries == b.entries and a.by_n == b.by_n
    assert len(a.entries) == len({(e["graph6"], tuple(e["pair"])) for e in a.entries})
    assert len(_keys(a)) == len(a.entries)


def test_search_guard():
    with pytest.raises(GuardError):
        search_two_marked(8)
    with pytest.raises(ValueError):
        search_two_marked(4, "colourable")
