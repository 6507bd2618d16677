"""Simple undirected graphs on dense vertex indices, plus labeled pairs.

Vertices are ``0..n-1``.  Edges are stored as ``(u, v)`` with ``u < v`` and
sorted lexicographically; the position of an edge in that list is its stable
index, which certificates refer to.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid input (loops, bad indices, wrong shape)."""


class Graph:
    __slots__ = ("n", "edges", "_adj", "_index", "__dict__")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm = set()
        for a, b in edges:
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            e = (a, b) if a < b else (b, a)
            if e in norm:
                raise GraphError(f"parallel edge {e}")
            norm.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        self._adj = tuple(frozenset(s) for s in adj)
        self._index = {e: i for i, e in enumerate(self.edges)}

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_index(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        try:
            return self._index[e]
        except KeyError:
            raise GraphError(f"no edge {e}") from None

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks, one int per vertex."""
        return tuple(sum(1 << u for u in s) for s in self._adj)

    # -- derived graphs ------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``; returns it with the old index of each new vertex."""
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        return Graph(len(keep), edges), keep

    def remove_vertices(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def remove_edge(self, e: int) -> "Graph":
        if not 0 <= e < self.m:
            raise GraphError(f"edge index {e} out of range (m={self.m})")
        return Graph(self.n, self.edges[:e] + self.edges[e + 1:])

    def add_edges(self, extra: Iterable[tuple[int, int]], n: int | None = None) -> "Graph":
        return Graph(self.n if n is None else n, list(self.edges) + list(extra))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[a], perm[b]) for a, b in self.edges])

    # -- connectivity --------------------------------------------------

    def components(self, within: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components (of the subgraph induced by ``within``), each sorted."""
        alive = set(range(self.n)) if within is None else set(within)
        seen: set[int] = set()
        comps = []
        for s in sorted(alive):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if u in alive and u not in seen:
                        seen.add(u)
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_two_connected(self) -> bool:
        if self.n < 3 or not self.is_connected():
            return False
        return all(len(self.components(set(range(self.n)) - {v})) == 1 for v in range(self.n))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def distances_from(self, sources: Iterable[int]) -> list[int | None]:
        dist: list[int | None] = [None] * self.n
        frontier = sorted(set(sources))
        for s in frontier:
            dist[s] = 0
        d = 0
        while frontier:
            d += 1
            nxt = []
            for v in frontier:
                for u in sorted(self._adj[v]):
                    if dist[u] is None:
                        dist[u] = d
                        nxt.append(u)
            frontier = nxt
        return dist

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class LabeledPair:
    """A graph together with a natural-number label ``h(v)`` on every vertex."""

    graph: Graph
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(h) for h in self.labels)
        object.__setattr__(self, "labels", labels)
        if len(labels) != self.graph.n:
            raise GraphError(f"{len(labels)} labels for {self.graph.n} vertices")
        if any(h < 0 for h in labels):
            raise GraphError("labels must be nonnegative")

    @classmethod
    def marked(cls, g: Graph, *marked: int) -> "LabeledPair":
        """The labeling that is 1 on each marked vertex and 0 elsewhere (h_x, h_{x,y}, ...)."""
        labels = [0] * g.n
        for v in marked:
            if not 0 <= v < g.n:
                raise GraphError(f"marked vertex {v} out of range")
            labels[v] += 1
        return cls(g, tuple(labels))

    @property
    def marked_vertices(self) -> list[int]:
        return [v for v, h in enumerate(self.labels) if h]

    def is_hx(self) -> bool:
        return sorted(self.labels) == [0] * (self.graph.n - 1) + [1]

    @property
    def x(self) -> int:
        """The marked vertex of an h_x labeling."""
        if not self.is_hx():
            raise GraphError(f"labels {self.labels} are not of h_x form")
        return self.labels.index(1)

    def degree_bound(self) -> tuple[int, ...]:
        """``f = d_G - h``."""
        return tuple(d - h for d, h in zip(self.graph.degrees, self.labels))

    def induced(self, vertices: Iterable[int]) -> tuple["LabeledPair", list[int]]:
        sub, keep = self.graph.induced(vertices)
        return LabeledPair(sub, tuple(self.labels[v] for v in keep)), keep


# -- named graphs ------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, list(g.edges) + [(a + g.n, b + g.n) for a, b in h.edges])


def glue(g: Graph, h: Graph, x_g: int, x_h: int) -> tuple[Graph, list[int]]:
    """Identify vertex ``x_h`` of ``h`` with ``x_g`` of ``g``.

    Vertices of ``g`` keep their indices; the others of ``h`` follow in order.
    Returns the glued graph and the map from ``h``'s vertices to the new ones.
    """
    hmap = []
    nxt = g.n
    for v in range(h.n):
        if v == x_h:
            hmap.append(x_g)
        else:
            hmap.append(nxt)
            nxt += 1
    return Graph(nxt, list(g.edges) + [(hmap[a], hmap[b]) for a, b in h.edges]), hmap


def subdivided_path(g_edges: list, start: int, end: int, length: int, next_vertex: int):
    """Append a path of ``length`` edges from ``start`` to ``end``; returns its vertex list and next free index."""
    verts = [start] + list(range(next_vertex, next_vertex + length - 1)) + [end]
    g_edges.extend(zip(verts, verts[1:]))
    return verts, next_vertex + length - 1


def theta_graph(lengths: Sequence[int]) -> Graph:
    """Poles 0 and 1 joined by three internally disjoint paths of the given lengths."""
    if len(lengths) != 3 or min(lengths) < 1 or sorted(lengths)[1] < 2:
        raise GraphError(f"invalid theta path lengths {lengths}")
    edges: list = []
    nxt = 2
    for ell in lengths:
        _, nxt = subdivided_path(edges, 0, 1, ell, nxt)
    return Graph(nxt, edges)


def t_graph(lengths: Sequence[int]) -> Graph:
    """T-graph with apex 0, triangle 1,2,3 and apex paths of the given lengths (in that order)."""
    if len(lengths) != 3 or min(lengths) < 1:
        raise GraphError(f"invalid T-graph path lengths {lengths}")
    edges: list = [(1, 2), (1, 3), (2, 3)]
    nxt = 4
    for z, ell in zip((1, 2, 3), lengths):
        _, nxt = subdivided_path(edges, 0, z, ell, nxt)
    return Graph(nxt, edges)


def t_plus_graph(lengths: Sequence[int]) -> Graph:
    """T-graph (as :func:`t_graph`) plus one extra vertex adjacent to exactly the triangle."""
    t = t_graph(lengths)
    u = t.n
    return t.add_edges([(u, 1), (u, 2), (u, 3)], n=t.n + 1)


# The three seed pairs; each is (graph, x).
SEED_K4 = (complete_graph(4), 3)
SEED_T222 = (
    Graph(7, [(0, 1), (1, 2), (0, 2), (3, 5), (1, 5), (3, 4), (0, 4), (3, 6), (2, 6)]),
    3,
)
MOSER_SPINDLE = (
    Graph(7, [(0, 2), (0, 3), (0, 1), (2, 3), (1, 4), (1, 5), (4, 5),
              (2, 6), (3, 6), (4, 6), (5, 6)]),
    6,
)

# Choosable-but-not-paintable and paintable-but-not-AT examples for two marked vertices.
SPLIT_G1 = (Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4), (2, 4)]), (1, 2))
SPLIT_G2 = (Graph(5, [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)]), (1, 2))
