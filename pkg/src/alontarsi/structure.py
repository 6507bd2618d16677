"""Block decomposition, lobes, Gallai trees, theta/T-graph detection and stretching."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError, LabeledPair


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: list[tuple[int, ...]]
    block_edges: list[tuple[int, ...]]
    cut_vertices: frozenset[int]
    incidence: list[tuple[int, int]] = field(default_factory=list)  # (block index, cut vertex)

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks (2-connected pieces and bridges) via Hopcroft-Tarjan, iteratively.

    Isolated vertices come out as single-vertex blocks with no edges.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[tuple[frozenset[int], list[int]]] = []
    timer = 0
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    for root in range(n):
        if disc[root] != -1:
            continue
        if not nbrs[root]:
            disc[root] = timer
            timer += 1
            found.append((frozenset([root]), []))
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    estack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, v, iter(nbrs[u])))
                    advanced = True
                    break
                if u != parent and disc[u] < disc[v]:
                    estack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    verts: set[int] = set()
                    eids = []
                    while True:
                        a, b = estack.pop()
                        verts.update((a, b))
                        eids.append(g.edge_index(a, b))
                        if (a, b) == (parent, v):
                            break
                    found.append((frozenset(verts), sorted(eids)))
    found.sort(key=lambda t: (min(t[0]), sorted(t[0])))
    blist = [tuple(sorted(b)) for b, _ in found]
    elist = [tuple(e) for _, e in found]
    count = [0] * n
    for b in blist:
        for v in b:
            count[v] += 1
    cuts = frozenset(v for v in range(n) if count[v] >= 2)
    inc = [(i, v) for i, b in enumerate(blist) for v in b if v in cuts]
    return BlockDecomposition(blist, elist, cuts, inc)


def cut_vertices(g: Graph) -> frozenset[int]:
    return blocks(g).cut_vertices


def _block_is_complete_or_odd_cycle(k: int, m: int) -> bool:
    if m == k * (k - 1) // 2:
        return True
    # a 2-connected block with as many edges as vertices is a cycle
    return k >= 3 and m == k and k % 2 == 1


def is_gallai_tree(g: Graph) -> bool:
    """Connected and every block is complete or an odd cycle."""
    if not g.is_connected():
        raise GraphError("is_gallai_tree needs a connected graph")
    bd = blocks(g)
    return all(_block_is_complete_or_odd_cycle(len(b), len(e)) for b, e in zip(bd.blocks, bd.block_edges))


def non_gallai_blocks(g: Graph) -> list[int]:
    """Indices of blocks that are neither complete nor odd cycles."""
    bd = blocks(g)
    return [i for i, (b, e) in enumerate(zip(bd.blocks, bd.block_edges))
            if not _block_is_complete_or_odd_cycle(len(b), len(e))]


def is_gallai_forest(g: Graph, vertices: Sequence[int] | None = None) -> list[bool]:
    """Gallai-tree verdict per component of the subgraph induced by ``vertices``."""
    sub, _ = g.induced(range(g.n) if vertices is None else vertices)
    return [is_gallai_tree(sub.induced(c)[0]) for c in sub.components()]


def lobes(g: Graph, anchor) -> list[list[int]]:
    """x-lobes (``anchor`` an int) or B-lobes (``anchor`` a collection of block vertices).

    Each lobe is a sorted vertex list; lobes are sorted by smallest member.
    """
    if not g.is_connected():
        raise GraphError("lobes need a connected graph")
    if isinstance(anchor, int):
        if not 0 <= anchor < g.n:
            raise GraphError(f"vertex {anchor} out of range")
        rest = set(range(g.n)) - {anchor}
        out = [sorted(c + [anchor]) for c in g.components(rest)]
    else:
        bset = set(anchor)
        if tuple(sorted(bset)) not in blocks(g).blocks:
            raise GraphError(f"{sorted(bset)} is not a block")
        out = []
        for c in g.components(set(range(g.n)) - bset):
            att = {u for v in c for u in g.neighbors(v) if u in bset}
            if len(att) != 1:
                raise GraphError("component attaches to more than one block vertex")
            out.append(sorted(c + list(att)))
    return sorted(out, key=lambda lobe: (lobe[0], lobe))


# -- theta and T-graphs -----------------------------------------------------


@dataclass(frozen=True)
class ThetaWitness:
    poles: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]  # each from poles[0] to poles[1]

    @property
    def path_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


@dataclass(frozen=True)
class TGraphWitness:
    apex: int
    triangle: tuple[int, int, int]
    paths: tuple[tuple[int, ...], ...]  # paths[i] runs from the apex to triangle[i]

    @property
    def path_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)


def _walk(g: Graph, start: int, first: int) -> list[int]:
    """Follow degree-2 vertices from ``start`` through ``first`` until a vertex of other degree."""
    path = [start, first]
    prev, cur = start, first
    while g.degree(cur) == 2:
        a, b = g.neighbors(cur)
        nxt = b if a == prev else a
        if nxt == start:
            break
        path.append(nxt)
        prev, cur = cur, nxt
    return path


def detect_theta(g: Graph) -> ThetaWitness | None:
    """Witness iff ``g`` is exactly a theta-graph."""
    if not g.is_connected():
        return None
    deg = g.degrees
    poles = [v for v in range(g.n) if deg[v] == 3]
    if len(poles) != 2 or any(d != 2 for v, d in enumerate(deg) if v not in poles):
        return None
    a, b = poles
    paths = []
    for u in sorted(g.neighbors(a)):
        p = _walk(g, a, u)
        if p[-1] != b:
            return None
        paths.append(tuple(p))
    paths.sort(key=lambda p: (len(p), p))
    return ThetaWitness((a, b), tuple(paths))


def detect_t_graph(g: Graph, x: int) -> TGraphWitness | None:
    """Witness iff ``g`` is exactly a T-graph with apex ``x``."""
    if not 0 <= x < g.n or g.degree(x) != 3 or not g.is_connected():
        return None
    paths = []
    for u in sorted(g.neighbors(x)):
        p = _walk(g, x, u)
        if p[-1] == x or g.degree(p[-1]) != 3:
            return None
        paths.append(tuple(p))
    zs = [p[-1] for p in paths]
    if len(set(zs)) != 3:
        return None
    if not all(g.has_edge(zs[i], zs[j]) for i in range(3) for j in range(i + 1, 3)):
        return None
    covered = {v for p in paths for v in p}
    if len(covered) != g.n or sum(len(p) - 1 for p in paths) + 3 != g.m:
        return None
    order = sorted(range(3), key=lambda i: zs[i])
    return TGraphWitness(x, tuple(zs[i] for i in order), tuple(paths[i] for i in order))


# -- stretching ---------------------------------------------------------------


def stretch(p: LabeledPair, e: int) -> LabeledPair:
    """Subdivide edge ``e`` twice; the new vertices ``n`` and ``n+1`` get label 0."""
    g = p.graph
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range (m={g.m})")
    u1, u2 = g.edges[e]
    v1, v2 = g.n, g.n + 1
    edges = [ed for i, ed in enumerate(g.edges) if i != e] + [(u1, v1), (v1, v2), (v2, u2)]
    return LabeledPair(Graph(g.n + 2, edges), p.labels + (0, 0))


def unstretch_candidates(p: LabeledPair) -> list[tuple[int, int, int, int]]:
    """Induced paths ``u1 v1 v2 u2`` with ``d(v1) = d(v2) = 2`` and zero labels on ``v1, v2``.

    Each path is reported once, oriented so that ``v1 < v2``.
    """
    g = p.graph
    out = []
    for v1, v2 in g.edges:
        if g.degree(v1) != 2 or g.degree(v2) != 2 or p.labels[v1] or p.labels[v2]:
            continue
        (u1,) = g.neighbors(v1) - {v2}
        (u2,) = g.neighbors(v2) - {v1}
        if u1 == u2 or g.has_edge(u1, u2):
            continue
        out.append((u1, v1, v2, u2))
    return out


def unstretch(p: LabeledPair, path: tuple[int, int, int, int]) -> LabeledPair:
    """``(G - v1 - v2) + u1u2`` with labels restricted."""
    u1, v1, v2, u2 = path
    sub, keep = p.induced(set(range(p.graph.n)) - {v1, v2})
    pos = {v: i for i, v in enumerate(keep)}
    return LabeledPair(sub.graph.add_edges([(pos[u1], pos[u2])]), sub.labels)
