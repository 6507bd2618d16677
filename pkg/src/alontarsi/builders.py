"""Explicit Alon-Tarsi orientations for the small reducible configurations,
cut-vertex gluing, induced-subgraph extension, and the stretching transfer check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, LabeledPair, glue
from .orient import EulerCounts, Orientation, eulerian_counts, is_pair_at
from .structure import TGraphWitness, ThetaWitness, detect_t_graph, stretch


class ConstructionError(ValueError):
    """A builder's hypotheses do not hold for the given input."""


def _graph_from_paths(paths, extra_edges=()) -> Graph:
    edges = set()
    for p in paths:
        for a, b in zip(p, p[1:]):
            edges.add((min(a, b), max(a, b)))
    for a, b in extra_edges:
        edges.add((min(a, b), max(a, b)))
    n = 1 + max(v for e in edges for v in e)
    return Graph(n, edges)


def _path_arcs(path: Sequence[int]) -> list[tuple[int, int]]:
    return list(zip(path, path[1:]))


def _reverse(path: Sequence[int]) -> list[int]:
    return list(reversed(path))


def apex_bound(g: Graph, x: int) -> tuple[int, ...]:
    """``d_G - h_x``."""
    return tuple(d - (1 if v == x else 0) for v, d in enumerate(g.degrees))


# -- Lemma-style constructions ------------------------------------------------


def build_euler_lemma_orientation(g: Graph, x: int, z1: int, z2: int) -> Orientation:
    """Orientation with ``EE = EO + 1``, out-degree at most 1 at ``x`` and ``d(v) - 1`` elsewhere.

    Needs ``H = G - x`` connected, ``N_H[z1] = N_H[z2]``, ``x ~ z1`` and ``x !~ z2``.
    ``H`` is ordered breadth-first from ``z1`` with ``z2`` second (ties by index) and its
    edges point forward; ``x z1`` points into ``z1`` and every other edge at ``x`` into ``x``.
    """
    rest = [v for v in range(g.n) if v != x]
    if len(g.components(rest)) != 1:
        raise ConstructionError("G - x is not connected")
    if z1 == z2 or x in (z1, z2):
        raise ConstructionError("x, z1, z2 must be distinct")
    if not g.has_edge(x, z1):
        raise ConstructionError("x is not adjacent to z1")
    if g.has_edge(x, z2):
        raise ConstructionError("x is adjacent to z2")
    closed1 = (g.neighbors(z1) - {x}) | {z1}
    closed2 = (g.neighbors(z2) - {x}) | {z2}
    if closed1 != closed2:
        raise ConstructionError("z1 and z2 do not have equal closed neighborhoods in G - x")
    order = [z1, z2]
    placed = {z1, z2, x}
    frontier = [z1, z2]
    while frontier:
        nxt = []
        for v in frontier:
            for u in sorted(g.neighbors(v)):
                if u not in placed:
                    placed.add(u)
                    order.append(u)
                    nxt.append(u)
        frontier = nxt
    rank = {v: i for i, v in enumerate(order)}
    arcs = []
    for a, b in g.edges:
        if x in (a, b):
            other = b if a == x else a
            arcs.append((x, z1) if other == z1 else (other, x))
        else:
            arcs.append((a, b) if rank[a] < rank[b] else (b, a))
    return Orientation.from_arcs(g, arcs)


def build_theta_orientation(w: ThetaWitness, x: int, g: Graph | None = None) -> Orientation:
    """Two paths into the pole ``x`` and one out of it, each oriented consistently.

    Exactly three spanning Eulerian subgraphs, so ``EE + EO = 3``.
    """
    if x not in w.poles:
        raise ConstructionError(f"{x} is not a pole of the theta-graph")
    g = g or _graph_from_paths(w.paths)
    paths = [list(p) if p[0] == x else _reverse(p) for p in w.paths]  # from x
    arcs = []
    for p in paths[:2]:
        arcs += _path_arcs(_reverse(p))
    arcs += _path_arcs(paths[2])
    return Orientation.from_arcs(g, arcs)


def _t_graph(w: TGraphWitness) -> Graph:
    z = w.triangle
    return _graph_from_paths(w.paths, [(z[0], z[1]), (z[0], z[2]), (z[1], z[2])])


def _t_arcs(w: TGraphWitness, into: Sequence[int], out: int) -> list[tuple[int, int]]:
    """Paths ``into`` point at the apex, path ``out`` leaves it; triangle cyclic
    ``z[into[0]] -> z[into[1]] -> z[out] -> z[into[0]]``."""
    arcs = []
    for i in into:
        arcs += _path_arcs(_reverse(w.paths[i]))
    arcs += _path_arcs(w.paths[out])
    z1, z2, z3 = w.triangle[into[0]], w.triangle[into[1]], w.triangle[out]
    arcs += [(z1, z2), (z2, z3), (z3, z1)]
    return arcs


def build_t_orientation(w: TGraphWitness, g: Graph | None = None) -> Orientation:
    """For a T-graph whose apex paths do not all share a parity: four Eulerian subgraphs split 3/1."""
    lengths = w.path_lengths
    pair = next(((i, j) for i in range(3) for j in range(i + 1, 3)
                 if lengths[i] % 2 != lengths[j] % 2), None)
    if pair is None:
        raise ConstructionError(f"path lengths {lengths} all have the same parity")
    out = 3 - pair[0] - pair[1]
    g = g or _t_graph(w)
    return Orientation.from_arcs(g, _t_arcs(w, pair, out))


def build_t_plus_orientation(w: TGraphWitness, u: int, g: Graph | None = None) -> Orientation:
    """T-graph plus a vertex ``u`` adjacent to exactly the triangle.

    Starts from the ``K5 - xu`` orientation of :func:`build_euler_lemma_orientation` and
    orients each apex path consistently with its contracted edge, which keeps
    ``EE + EO`` odd.
    """
    z = w.triangle
    if g is None:
        g = _graph_from_paths(w.paths, [(z[0], z[1]), (z[0], z[2]), (z[1], z[2])]
                              + [(u, zi) for zi in z])
    if g.neighbors(u) != frozenset(z):
        raise ConstructionError(f"vertex {u} is not adjacent to exactly the triangle {z}")
    base = Graph(5, [(a, b) for a in range(5) for b in range(a + 1, 5) if {a, b} != {0, 4}])
    # base vertices: 0 apex, 1..3 triangle, 4 the extra vertex
    base_d = build_euler_lemma_orientation(base, 0, 1, 4)
    name = {0: w.apex, 1: z[0], 2: z[1], 3: z[2], 4: u}
    arcs = []
    for a, b in base_d.arcs():
        if 0 in (a, b):
            i = (b if a == 0 else a) - 1
            p = list(w.paths[i])
            arcs += _path_arcs(p if a == 0 else _reverse(p))
        else:
            arcs.append((name[a], name[b]))
    return Orientation.from_arcs(g, arcs)


def build_added_path_orientation(w: TGraphWitness, p_endpoints: tuple[int, int], p_prime_len: int,
                                 g: Graph | None = None) -> Orientation:
    """A T-graph with equal path parities plus a new path ``P'`` between the ends of a
    subpath ``P`` of an apex path (inner vertices of ``P`` and one of its ends of degree 2).

    The apex path holding ``P`` and one other point into the apex, the third leaves it, the
    triangle is cyclic, and ``P'`` runs against ``P``.  The T-graph part has ``EE = EO``;
    the Eulerian subgraphs using ``P'`` are ``P'P`` joined with the three that avoid the
    path holding ``P``, so ``|EE - EO| = 1``.  New vertices are numbered after the T-graph.
    """
    if p_prime_len < 2:
        raise ConstructionError("the added path must have length at least 2")
    lengths = w.path_lengths
    if len({ell % 2 for ell in lengths}) != 1:
        raise ConstructionError(f"path lengths {lengths} are of mixed parity")
    base = g or _t_graph(w)
    a, b = p_endpoints
    hit = None
    for i, path in enumerate(w.paths):
        if a in path and b in path:
            ia, ib = path.index(a), path.index(b)
            if ia != ib:
                hit = (i, min(ia, ib), max(ia, ib))
                break
    if hit is None:
        raise ConstructionError(f"{p_endpoints} do not lie on a common apex path")
    i, lo, hi = hit
    path = w.paths[i]
    sub = path[lo:hi + 1]
    inner_ok = all(base.degree(v) == 2 for v in sub[1:-1])
    end_ok = base.degree(sub[0]) == 2 or base.degree(sub[-1]) == 2
    if not (inner_ok and end_ok):
        raise ConstructionError("P needs degree-2 inner vertices and a degree-2 end")
    others = [j for j in range(3) if j != i]
    arcs = _t_arcs(w, (i, others[0]), others[1])
    # P runs from the triangle side (high index) towards the apex; P' goes back
    near_apex, near_triangle = path[lo], path[hi]
    k = p_prime_len - 1
    new = list(range(base.n, base.n + k))
    p_prime = [near_apex] + new + [near_triangle]
    arcs += _path_arcs(p_prime)
    g2 = base.add_edges(zip(p_prime, p_prime[1:]), n=base.n + k)
    return Orientation.from_arcs(g2, arcs)


# -- gluing and extension -----------------------------------------------------


def compose_cutvertex(d1: Orientation, d2: Orientation, x1: int, x2: int) -> tuple[Orientation, EulerCounts]:
    """Glue two oriented graphs by identifying ``x2`` with ``x1``.

    No directed cycle meets both sides, so ``EE - EO`` of the result is the product
    of the two differences; this is asserted.
    """
    g, hmap = glue(d1.graph, d2.graph, x1, x2)
    arcs = d1.arcs() + [(hmap[a], hmap[b]) for a, b in d2.arcs()]
    d = Orientation.from_arcs(g, arcs)
    counts = eulerian_counts(d)
    c1, c2 = eulerian_counts(d1), eulerian_counts(d2)
    if counts.diff != c1.diff * c2.diff:
        raise AssertionError(f"product identity failed: {counts} vs {c1} * {c2}")
    return d, counts


def extend_orientation(g: Graph, sub_vertices: Sequence[int], sub: Orientation,
                       x: int | None = None) -> Orientation:
    """Extend an orientation of the induced subgraph ``G[sub_vertices]`` to ``G`` without new cycles.

    Outside edges point away from the subgraph: vertices are ranked by breadth-first
    distance, then index.  When ``x`` lies outside the subgraph it is ranked after every
    vertex of the subgraph's component in ``G - x`` (so all those edges enter ``x``) and
    before the rest; this needs ``x`` to have two neighbours in that component.
    """
    keep = list(sub_vertices)
    if sub.graph.n != len(keep):
        raise GraphError("sub orientation does not match the vertex list")
    inside = set(keep)
    rank: dict[int, tuple] = {}
    if x is None or x in inside:
        dist = g.distances_from(keep)
        if any(dd is None for dd in dist):
            raise GraphError("graph is not connected")
        for v in range(g.n):
            rank[v] = (dist[v], v)
    else:
        rest = set(range(g.n)) - {x}
        comp0 = next(c for c in g.components(rest) if inside & set(c))
        if not inside <= set(comp0):
            raise GraphError("subgraph must lie in one component of G - x")
        if len(g.neighbors(x) & set(comp0)) < 2:
            raise ConstructionError("x needs two neighbours in the subgraph's component of G - x")
        sub_g, _ = g.induced(comp0)
        pos = {v: i for i, v in enumerate(comp0)}
        dist0 = sub_g.distances_from([pos[v] for v in keep])
        for v in comp0:
            rank[v] = (0, dist0[pos[v]], v)
        rank[x] = (1, 0, x)
        dist1 = g.distances_from([x])
        for v in range(g.n):
            if v not in rank:
                if dist1[v] is None:
                    raise GraphError("graph is not connected")
                rank[v] = (2, dist1[v], v)
    sub_arcs = {(keep[a], keep[b]) for a, b in sub.arcs()}
    arcs = []
    for a, b in g.edges:
        if a in inside and b in inside:
            arcs.append((a, b) if (a, b) in sub_arcs else (b, a))
        else:
            arcs.append((a, b) if rank[a] < rank[b] else (b, a))
    return Orientation.from_arcs(g, arcs)


# -- stretching transfer ------------------------------------------------------


@dataclass(frozen=True)
class StretchReport:
    edge: int
    at_g: bool
    at_g_minus_e: bool
    at_stretched: bool
    witnesses: dict

    @property
    def implication1(self) -> bool:
        return (not self.at_g) or self.at_stretched

    @property
    def implication2(self) -> bool:
        return (not self.at_stretched) or self.at_g or self.at_g_minus_e

    @property
    def holds(self) -> bool:
        return self.implication1 and self.implication2


def stretch_transfer_check(p: LabeledPair, e: int, symmetry: bool = False) -> StretchReport:
    """AT status of ``(G, h)``, ``(G - e, h)`` and the stretched pair, with both implications."""
    q = stretch(p, e)
    wg = is_pair_at(p, symmetry=symmetry)
    we = is_pair_at(LabeledPair(p.graph.remove_edge(e), p.labels), symmetry=symmetry)
    ws = is_pair_at(q, symmetry=symmetry)
    return StretchReport(e, wg is not None, we is not None, ws is not None,
                         {"g": wg, "g_minus_e": we, "stretched": ws})


def stretch_orientation(d: Orientation, e: int) -> Orientation:
    """Carry an orientation of ``G`` to the stretch of edge ``e`` (new path follows the edge's direction)."""
    g = d.graph
    u1, u2 = g.edges[e]
    v1, v2 = g.n, g.n + 1
    tail_first = d.direction[e] == 0
    path = [u1, v1, v2, u2] if tail_first else [u2, v2, v1, u1]
    arcs = [arc for i, arc in enumerate(d.arcs()) if i != e] + _path_arcs(path)
    g2 = stretch(LabeledPair(g, (0,) * g.n), e).graph
    return Orientation.from_arcs(g2, arcs)


def t_witness_of(g: Graph, x: int) -> TGraphWitness:
    w = detect_t_graph(g, x)
    if w is None:
        raise ConstructionError("not a T-graph with that apex")
    return w
