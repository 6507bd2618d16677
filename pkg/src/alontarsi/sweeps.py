"""Exhaustive verification sweeps and the two-marked-vertex search."""

from __future__ import annotations

import json
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import config
from .builders import (build_added_path_orientation, build_euler_lemma_orientation, build_t_orientation,
                       build_theta_orientation, compose_cutvertex, stretch_transfer_check)
from .classifier import classify_connected, classify_degree_at, classify_two_connected
from .coefficient import coefficient_oracle
from .coloring import is_f_choosable, is_f_paintable
from .config import GuardError
from .graph import Graph, LabeledPair, complete_graph, t_graph, theta_graph
from .graph6 import emit_graph6, parse_graph6
from .iso import canonical_form, enumerate_graphs, vertex_orbits
from .orient import eulerian_counts, is_degree_at, is_f_at, is_pair_at
from .structure import detect_t_graph, detect_theta, unstretch_candidates

SCOPES = ("degree_at", "main_lemma", "thm_1connected", "hx_equivalence", "lemma_suite")
SCOPE_LIMITS = {"degree_at": 7, "main_lemma": 7, "thm_1connected": 7, "hx_equivalence": 6, "lemma_suite": 5}
SCOPE_FILTER = {"degree_at": "connected", "main_lemma": "two_connected", "thm_1connected": "connected",
                "hx_equivalence": "connected", "lemma_suite": "connected"}


@dataclass
class SweepReport:
    scope: str
    parameters: dict
    counts: Counter = field(default_factory=Counter)
    histogram: Counter = field(default_factory=Counter)
    mismatches: list = field(default_factory=list)
    wall_time: float = 0.0
    config: dict = field(default_factory=config.snapshot)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        out = asdict(self)
        out["counts"] = dict(self.counts)
        out["histogram"] = dict(self.histogram)
        out["ok"] = self.ok
        return out


# -- per-graph workers (module level so a process pool can pickle them) ---------


def _check_degree_at(g: Graph) -> list[dict]:
    c = classify_degree_at(g)
    oracle = is_degree_at(g, symmetry=True) is not None
    rec = {"graph6": emit_graph6(g), "x": None, "tag": c.case_tag, "classifier": c.at, "oracle": oracle}
    return [rec]


def _check_pairs(g: Graph, classify) -> list[dict]:
    """The classifier on every vertex; the oracle once per automorphism orbit."""
    out = []
    g6 = emit_graph6(g)
    for orb in vertex_orbits(g):
        oracle = is_pair_at(LabeledPair.marked(g, orb[0]), symmetry=True) is not None
        for x in orb:
            c = classify(LabeledPair.marked(g, x))
            out.append({"graph6": g6, "x": x, "orbit": len(orb), "tag": c.case_tag,
                        "classifier": c.at, "oracle": oracle})
    return out


def _check_equivalence(g: Graph) -> list[dict]:
    out = []
    for orb in vertex_orbits(g):
        p = LabeledPair.marked(g, orb[0])
        f = p.degree_bound()
        at = is_f_at(g, f, symmetry=True) is not None
        paint = is_f_paintable(g, f)
        try:
            choose = is_f_choosable(g, f) is None
        except GuardError:
            choose = None
        verdicts = {"at": at, "paintable": paint, "choosable": choose}
        agree = len({v for v in verdicts.values() if v is not None}) == 1
        out.append({"graph6": emit_graph6(g), "x": orb[0], "orbit": len(orb),
                    "tag": "choosable_skipped" if choose is None else ("agree" if agree else "disagree"),
                    "classifier": at, "oracle": verdicts, "agree": agree})
    return out


def _labelings_up_to_two(n: int):
    yield (0,) * n
    for v in range(n):
        for h in (1, 2):
            lab = [0] * n
            lab[v] = h
            yield tuple(lab)
    for u, v in combinations(range(n), 2):
        lab = [0] * n
        lab[u] = lab[v] = 1
        yield tuple(lab)


def _check_lemmas(g: Graph) -> list[dict]:
    """Stretching transfer and coefficient agreement on one graph."""
    out = []
    g6 = emit_graph6(g)
    for lab in _labelings_up_to_two(g.n):
        p = LabeledPair(g, lab)
        for e in range(g.m):
            r = stretch_transfer_check(p, e, symmetry=True)
            out.append({"graph6": g6, "x": list(lab), "tag": "stretching", "edge": e,
                        "classifier": r.holds, "oracle": True})
    for f in _all_bounds(g):
        a = is_f_at(g, f) is not None
        b = coefficient_oracle(g, f)
        out.append({"graph6": g6, "x": list(f), "tag": "coefficient", "classifier": b, "oracle": a})
    return out


def _all_bounds(g: Graph):
    from itertools import product
    return product(*[range(1, d + 2) for d in g.degrees])


def _work(scope: str, g6: str) -> list[dict]:
    g = parse_graph6(g6)
    if scope == "degree_at":
        return _check_degree_at(g)
    if scope == "main_lemma":
        return _check_pairs(g, classify_two_connected)
    if scope == "thm_1connected":
        return _check_pairs(g, classify_connected)
    if scope == "hx_equivalence":
        return _check_equivalence(g)
    if scope == "lemma_suite":
        return _check_lemmas(g)
    raise ValueError(f"unknown scope {scope!r}")


def _work_star(args):
    return _work(*args)


# -- builder suites (graph independent) -----------------------------------------


def builder_suite(seed: int = 0) -> list[dict]:
    """Each constructive orientation over parameterised families, plus randomised gluing."""
    out = []

    def rec(name, params, ok, detail=""):
        out.append({"graph6": None, "x": params, "tag": name, "classifier": ok, "oracle": True,
                    "detail": detail})

    for lengths in [(1, 2, 2), (1, 2, 3), (2, 2, 2), (1, 3, 3), (2, 3, 4), (2, 2, 3), (3, 3, 3),
                    (1, 4, 5), (2, 2, 5), (1, 2, 4), (3, 4, 5), (2, 4, 4)]:
        g = theta_graph(lengths)
        w = detect_theta(g)
        c = eulerian_counts(build_theta_orientation(w, w.poles[0], g))
        rec("theta", list(lengths), c.total == 3, str(c))
    for lengths in [(1, 1, 2), (1, 2, 2), (1, 2, 3), (2, 2, 3), (1, 1, 4), (2, 3, 3), (1, 3, 4),
                    (2, 2, 1), (3, 4, 4), (1, 2, 5), (2, 4, 5), (3, 3, 4)]:
        g = t_graph(lengths)
        c = eulerian_counts(build_t_orientation(detect_t_graph(g, 0), g))
        rec("t_graph", list(lengths), sorted((c.even, c.odd)) == [1, 3], str(c))
    for k in range(4, 9):
        g = Graph(k, [e for e in complete_graph(k).edges if e != (0, 1)])
        c = eulerian_counts(build_euler_lemma_orientation(g, 0, 2, 1))
        rec("euler_lemma", [k], c.even == c.odd + 1, str(c))
    for k in range(4, 9):
        # x adjacent to only the first half of the others
        keep = [(u, v) for u, v in complete_graph(k).edges if not (u == 0 and v > k // 2)]
        g = Graph(k, keep)
        c = eulerian_counts(build_euler_lemma_orientation(g, 0, 1, k - 1))
        rec("euler_lemma", [k, "half"], c.even == c.odd + 1, str(c))
    for lengths in [(1, 1, 1), (2, 2, 2), (3, 1, 1), (1, 3, 1), (3, 3, 1), (2, 4, 2), (3, 3, 3),
                    (4, 2, 2), (2, 2, 4), (5, 1, 1)]:
        g = t_graph(lengths)
        w = detect_t_graph(g, 0)
        for i, path in enumerate(w.paths):
            if len(path) < 3:
                continue
            for plen in (2, 3):
                # P is the first edge of the path, ending in a degree-2 vertex
                d = build_added_path_orientation(w, (path[0], path[1]), plen, g)
                c = eulerian_counts(d)
                rec("added_path", [list(lengths), i, plen], abs(c.diff) == 1, str(c))
    rng = random.Random(seed)
    for trial in range(100):
        g1, x1 = _random_connected(rng)
        g2, x2 = _random_connected(rng)  # at most 7 edges each
        d1 = _random_orientation(rng, g1)
        d2 = _random_orientation(rng, g2)
        try:
            _, c = compose_cutvertex(d1, d2, x1, x2)
            rec("cutvertex", [trial], True, str(c))
        except AssertionError as e:
            rec("cutvertex", [trial], False, str(e))
    return out


def _random_connected(rng: random.Random) -> tuple[Graph, int]:
    n = rng.randint(2, 5)
    edges = {(rng.randrange(v), v) for v in range(1, n)}  # random tree
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(pairs)
    edges |= set(pairs[: rng.randint(0, min(len(pairs), 7 - (n - 1)))])
    return Graph(n, edges), rng.randrange(n)


def _random_orientation(rng: random.Random, g: Graph):
    from .orient import Orientation
    return Orientation(g, tuple(rng.randint(0, 1) for _ in range(g.m)))


# -- driver -------------------------------------------------------------------


def _load_checkpoint(path):
    if path and os.path.exists(path):
        with open(path) as fh:
            return json.load(fh)
    return {}


def _save_checkpoint(path, data):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def verify(scope: str, n_max: int, jobs: int = 1, checkpoint: str | None = None,
           n_min: int = 1) -> SweepReport:
    """Run one verification scope over every isomorphism class with ``n_min <= n <= n_max``."""
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}")
    limit = SCOPE_LIMITS[scope]
    if n_max > limit:
        raise GuardError(f"{scope} sweep size", n_max, limit)
    start = time.time()
    report = SweepReport(scope, {"n_min": n_min, "n_max": n_max, "filter": SCOPE_FILTER[scope],
                                 "jobs": jobs})
    done = _load_checkpoint(checkpoint)
    tasks = []
    for n in range(n_min, n_max + 1):
        for i, g in enumerate(enumerate_graphs(n, SCOPE_FILTER[scope])):
            tasks.append((f"{scope}:{n}:{i}", emit_graph6(g)))
    todo = [(k, g6) for k, g6 in tasks if k not in done]
    if jobs > 1 and todo:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_work_star, [(scope, g6) for _, g6 in todo], chunksize=8)
            for (k, _), res in zip(todo, results):
                done[k] = res
                if checkpoint and len(done) % 200 == 0:
                    _save_checkpoint(checkpoint, done)
    else:
        for k, g6 in todo:
            done[k] = _work(scope, g6)
            if checkpoint and len(done) % 200 == 0:
                _save_checkpoint(checkpoint, done)
    if checkpoint:
        _save_checkpoint(checkpoint, done)
    records = [r for k, _ in tasks for r in done[k]]
    if scope == "lemma_suite":
        records += builder_suite()
    report.counts["graphs"] = len(tasks)
    for r in records:
        report.counts["instances"] += 1
        report.histogram[r["tag"]] += 1
        if scope == "hx_equivalence":
            bad = not r["agree"]
        else:
            bad = r["classifier"] != r["oracle"]
        if r["classifier"] is True:
            report.counts["at"] += 1
        else:
            report.counts["not_at"] += 1
        if bad:
            report.mismatches.append(r)
    report.wall_time = round(time.time() - start, 3)
    return report


# -- two marked vertices --------------------------------------------------------


MODES = ("at", "choosable", "paintable")


def _holds(g: Graph, f, mode: str) -> bool:
    if mode == "at":
        return is_f_at(g, f, symmetry=True) is not None
    if mode == "choosable":
        return is_f_choosable(g, f) is None
    if mode == "paintable":
        return is_f_paintable(g, f)
    raise ValueError(f"mode must be one of {MODES}")


def is_unstretched(g: Graph) -> bool:
    """No induced path ``u1 v1 v2 u2`` whose inner vertices have degree 2."""
    return not unstretch_candidates(LabeledPair(g, (0,) * g.n))


def pair_orbits(g: Graph) -> list[list[tuple[int, int]]]:
    """Unordered vertex pairs grouped by automorphism orbit."""
    byform: dict[bytes, list] = {}
    for x, y in combinations(range(g.n), 2):
        colors = [int(v in (x, y)) for v in range(g.n)]
        byform.setdefault(canonical_form(g, colors), []).append((x, y))
    return sorted(byform.values())


@dataclass
class SearchCatalog:
    parameters: dict
    entries: list = field(default_factory=list)  # one per (graph, pair orbit)
    by_n: dict = field(default_factory=dict)
    skipped: list = field(default_factory=list)
    wall_time: float = 0.0
    config: dict = field(default_factory=config.snapshot)

    def totals(self) -> dict:
        keys = ("graphs", "pair_orbits", "raw_pairs")
        return {k: sum(row[k] for row in self.by_n.values()) for k in keys}

    def to_json(self) -> dict:
        out = asdict(self)
        out["totals"] = self.totals()
        return out


def search_two_marked(n_max: int, mode: str = "at", two_connected: bool = True,
                      unstretched: bool = True, n_min: int = 2) -> SearchCatalog:
    """Every graph (up to isomorphism) and unordered pair ``{x, y}`` (up to automorphism)
    for which ``(G, h_{x,y})`` fails the chosen property.

    Counts are aggregated three ways per ``n``: graphs with at least one such pair,
    (graph, pair orbit) entries, and raw vertex pairs of the representative graph.
    A pair whose instance exceeds a size guard is listed under ``skipped``.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n_max > 7:
        raise GuardError("two-marked search size", n_max, 7)
    start = time.time()
    cat = SearchCatalog({"n_min": n_min, "n_max": n_max, "mode": mode,
                         "two_connected": two_connected, "unstretched": unstretched})
    filt = "two_connected" if two_connected else "connected"
    for n in range(n_min, n_max + 1):
        row = {"graphs": 0, "pair_orbits": 0, "raw_pairs": 0, "graphs_tested": 0}
        for g in enumerate_graphs(n, filt):
            if unstretched and not is_unstretched(g):
                continue
            row["graphs_tested"] += 1
            hit = False
            for orb in pair_orbits(g):
                x, y = orb[0]
                p = LabeledPair.marked(g, x, y)
                try:
                    ok = _holds(g, p.degree_bound(), mode)
                except GuardError as e:
                    cat.skipped.append({"graph6": emit_graph6(g), "pair": [x, y], "guard": str(e)})
                    continue
                if not ok:
                    hit = True
                    row["pair_orbits"] += 1
                    row["raw_pairs"] += len(orb)
                    cat.entries.append({"n": n, "graph6": emit_graph6(g), "pair": [x, y],
                                        "orbit_size": len(orb)})
            row["graphs"] += hit
        cat.by_n[n] = row
    cat.wall_time = round(time.time() - start, 3)
    return cat
