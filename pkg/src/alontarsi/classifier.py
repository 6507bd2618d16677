"""Structural AT decisions for degree bounds and single-vertex labelings.

Case tags (``Classification.case_tag``), in evaluation order for connected pairs:

``gallai_tree``            G is a Gallai tree                              not AT
``degree_one``             d(x) = 1                                        not AT
``degree_two_gallai``      d(x) = 2 and a component of G - x is Gallai     not AT
``block_in_family``        x not a cut vertex, its block is in the seed
                           family, other blocks complete or odd cycles     not AT
``lobe_degree_one``        x a cut vertex, one non-Gallai x-lobe A, d_A(x)=1   not AT
``lobe_degree_two``        as above, d_A(x) = 2 and A - x Gallai           not AT
``lobe_block_in_family``   as above, x's block B of A in the family and
                           every B-lobe of A Gallai                        not AT
``at``                     none of the above                               AT

For 2-connected pairs ``classify_two_connected`` uses the shorter list
``degree_two_gallai`` / ``degree_two_not_gallai`` / ``complete`` / ``in_family``
/ ``at``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graph import MOSER_SPINDLE, Graph, GraphError, LabeledPair
from .iso import canonical_graph
from .structure import (TGraphWitness, blocks, detect_t_graph, is_gallai_tree, lobes,
                        non_gallai_blocks)

NOT_MEMBER = "not_member"
T_GRAPH_ODD = "t_graph_odd"
T_GRAPH_EVEN = "t_graph_even"
SPINDLE = "moser_spindle"

NOT_AT_TAGS = frozenset({
    "gallai_tree", "degree_one", "degree_two_gallai", "block_in_family",
    "lobe_degree_one", "lobe_degree_two", "lobe_block_in_family",
    "complete", "in_family",
})


@dataclass(frozen=True)
class DMembership:
    """Membership of an h_x pair in the seed family.

    ``witness`` is a TGraphWitness for the T-graph verdicts and, for the spindle,
    a tuple mapping each vertex to its counterpart in ``MOSER_SPINDLE``.
    """

    verdict: str
    witness: Any = None

    @property
    def member(self) -> bool:
        return self.verdict != NOT_MEMBER

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if isinstance(self.witness, TGraphWitness):
            out["apex"] = self.witness.apex
            out["triangle"] = list(self.witness.triangle)
            out["paths"] = [list(q) for q in self.witness.paths]
        elif self.witness is not None:
            out["map"] = list(self.witness)
        return out


@dataclass(frozen=True)
class Classification:
    at: bool
    case_tag: str
    witness: Any = None

    def __post_init__(self):
        if self.at != (self.case_tag not in NOT_AT_TAGS):
            raise ValueError(f"verdict {self.at} inconsistent with case {self.case_tag}")


def _require_hx(p: LabeledPair) -> int:
    if not p.is_hx():
        raise GraphError(f"labels {p.labels} are not of h_x form")
    return p.x


def _block_summary(g: Graph) -> list[list[int]]:
    return [list(b) for b in blocks(g).blocks]


# -- degree-AT ------------------------------------------------------------------


def classify_degree_at(g: Graph) -> Classification:
    """A connected graph is degree-AT iff it is not a Gallai tree."""
    if not g.is_connected():
        raise GraphError("classify_degree_at needs a connected graph")
    bad = non_gallai_blocks(g)
    if not bad:
        return Classification(False, "gallai_tree", _block_summary(g))
    return Classification(True, "at", list(blocks(g).blocks[bad[0]]))


# -- seed family ------------------------------------------------------------------


def _spindle_map(g: Graph, x: int) -> tuple[int, ...] | None:
    sg, sx = MOSER_SPINDLE
    if g.n != sg.n or g.m != sg.m or g.degree(x) != sg.degree(sx):
        return None
    cg, perm = canonical_graph(g, [int(v == x) for v in range(g.n)])
    cs, sperm = canonical_graph(sg, [int(v == sx) for v in range(sg.n)])
    if cg != cs:
        return None
    inv = [0] * sg.n
    for v, k in enumerate(sperm):
        inv[k] = v
    return tuple(inv[perm[v]] for v in range(g.n))


def membership_d(p: LabeledPair) -> DMembership:
    """Decide membership in the family generated from the three seeds by stretching.

    Members are T-graphs with apex x whose three apex-path lengths share a parity,
    and the Moser spindle with x its degree-4 vertex.
    """
    x = _require_hx(p)
    g = p.graph
    w = detect_t_graph(g, x)
    if w is not None:
        parities = {k % 2 for k in w.path_lengths}
        if len(parities) == 1:
            return DMembership(T_GRAPH_ODD if parities == {1} else T_GRAPH_EVEN, w)
        return DMembership(NOT_MEMBER)
    m = _spindle_map(g, x)
    if m is not None:
        return DMembership(SPINDLE, m)
    return DMembership(NOT_MEMBER)


seed_family_membership = membership_d


# -- 2-connected pairs ------------------------------------------------------------


def classify_two_connected(p: LabeledPair) -> Classification:
    x = _require_hx(p)
    g = p.graph
    if not g.is_two_connected():
        raise GraphError("classify_two_connected needs a 2-connected graph")
    if g.degree(x) == 2:
        rest, keep = g.remove_vertices([x])
        if is_gallai_tree(rest):
            return Classification(False, "degree_two_gallai", _block_summary(rest))
        bad = non_gallai_blocks(rest)
        return Classification(True, "degree_two_not_gallai",
                              [keep[v] for v in blocks(rest).blocks[bad[0]]])
    if g.is_complete():
        return Classification(False, "complete", g.n)
    mem = membership_d(p)
    if mem.member:
        return Classification(False, "in_family", mem)
    return Classification(True, "at", mem)


# -- connected pairs --------------------------------------------------------------


def _is_gallai(g: Graph, vertices) -> bool:
    sub, _ = g.induced(vertices)
    return is_gallai_tree(sub)


def _block_with(g: Graph, x: int) -> tuple[int, ...]:
    bd = blocks(g)
    (i,) = bd.blocks_of(x)
    return bd.blocks[i]


def classify_connected(p: LabeledPair) -> Classification:
    """Not AT iff one of the structural clauses holds; the first one found is reported."""
    x = _require_hx(p)
    g = p.graph
    if not g.is_connected():
        raise GraphError("classify_connected needs a connected graph")
    if is_gallai_tree(g):
        return Classification(False, "gallai_tree", _block_summary(g))
    dx = g.degree(x)
    if dx == 1:
        return Classification(False, "degree_one", sorted(g.neighbors(x)))
    if dx == 2:
        rest = [v for v in range(g.n) if v != x]
        for comp in g.components(rest):
            if _is_gallai(g, comp):
                return Classification(False, "degree_two_gallai", sorted(comp))

    bd = blocks(g)
    if x not in bd.cut_vertices:
        bverts = _block_with(g, x)
        others_ok = all(_is_gallai(g, b) for b in bd.blocks if b != bverts)
        if others_ok and len(bverts) >= 3:
            sub, keep = p.induced(bverts)
            mem = membership_d(sub)
            if mem.member:
                return Classification(False, "block_in_family",
                                      {"block": list(keep), "membership": mem})
        return Classification(True, "at", {"block": list(bverts)})

    xl = lobes(g, x)
    bad = [lobe for lobe in xl if not _is_gallai(g, lobe)]
    if len(bad) != 1:
        return Classification(True, "at", {"non_gallai_lobes": bad})
    lobe = bad[0]
    a, keep = p.induced(lobe)
    ax = a.x
    ag = a.graph
    info = {"lobe": list(keep)}
    if ag.degree(ax) == 1:
        return Classification(False, "lobe_degree_one", info)
    if ag.degree(ax) == 2:
        rest, rkeep = ag.remove_vertices([ax])
        if is_gallai_tree(rest):
            return Classification(False, "lobe_degree_two", info)
    bverts = _block_with(ag, ax)
    if len(bverts) >= 3:
        bpair, _ = a.induced(bverts)
        mem = membership_d(bpair)
        if mem.member and all(_is_gallai(ag, bl) for bl in lobes(ag, bverts)):
            info.update(block=[keep[v] for v in bverts], membership=mem)
            return Classification(False, "lobe_block_in_family", info)
    return Classification(True, "at", info)


# -- the family by explicit stretching ---------------------------------------------


def seed_pairs() -> list[tuple[LabeledPair, frozenset]]:
    """The three seeds with their stretchable ("bold") edges: the apex edges of K4, the
    apex paths of the subdivided T-graph, and none for the spindle."""
    from .graph import SEED_K4, SEED_T222

    out = []
    for g, x in (SEED_K4, SEED_T222):
        w = detect_t_graph(g, x)
        bold = frozenset(tuple(sorted(e)) for q in w.paths for e in zip(q, q[1:]))
        out.append((LabeledPair.marked(g, x), bold))
    sg, sx = MOSER_SPINDLE
    out.append((LabeledPair.marked(sg, sx), frozenset()))
    return out


def stretch_bold(p: LabeledPair, bold: frozenset, edge: tuple[int, int]) -> tuple[LabeledPair, frozenset]:
    """Stretch a bold edge; the three edges of the new path are bold."""
    from .structure import stretch

    e = p.graph.edge_index(*edge)
    q = stretch(p, e)
    u1, u2 = p.graph.edges[e]
    v1, v2 = p.graph.n, p.graph.n + 1
    new_bold = (bold - {(u1, u2)}) | {(u1, v1), (v1, v2), (min(v2, u2), max(v2, u2))}
    return q, frozenset(new_bold)


def family_by_stretching(max_n: int, max_stretches: int | None = None):
    """Every member with at most ``max_n`` vertices, generated from the seeds; one
    ``(pair, stretches)`` per isomorphism class of (graph, x)."""
    from .iso import canonical_form

    seen: dict[bytes, tuple[LabeledPair, int]] = {}
    frontier = []
    for p, bold in seed_pairs():
        key = canonical_form(p.graph, list(p.labels))
        seen[key] = (p, 0)
        frontier.append((p, bold, 0))
    while frontier:
        nxt = []
        for p, bold, k in frontier:
            if p.graph.n + 2 > max_n or (max_stretches is not None and k >= max_stretches):
                continue
            for edge in sorted(bold):
                q, qb = stretch_bold(p, bold, edge)
                key = canonical_form(q.graph, list(q.labels))
                if key not in seen:
                    seen[key] = (q, k + 1)
                    nxt.append((q, qb, k + 1))
        frontier = nxt
    return list(seen.values())
