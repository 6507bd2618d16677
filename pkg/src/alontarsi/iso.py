"""Canonical labeling for small graphs and isomorphism-free enumeration.

Canonical forms use colour refinement followed by individualization search,
keeping the lexicographically largest adjacency code over all leaves.  Within
a cell, vertices that are twins of each other are interchangeable by an
automorphism, so only one per twin class is individualized.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .graph import Graph, GraphError
from .graph6 import emit_graph6

MAX_CANON_N = 12
MAX_ENUM_N = 8


def _refine(masks: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        new: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {}
            for v in c:
                key = tuple(bin(masks[v] & cm).count("1") for cm in cell_masks)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                new.append(c)
                continue
            changed = True
            for key in sorted(sig):
                new.append(sig[key])
        cells = new
        if not changed:
            return cells


def _code(masks: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        mj = masks[order[j]]
        for i in range(j):
            code = (code << 1) | ((mj >> order[i]) & 1)
    return code


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[int, list[int]]:
    """Return ``(code, order)``: ``order[k]`` is the vertex placed at canonical position ``k``.

    ``colors`` optionally fixes an initial vertex colouring that isomorphisms must respect.
    """
    n = g.n
    if n > MAX_CANON_N:
        raise GraphError(f"canonical form limited to n <= {MAX_CANON_N}")
    masks = g.masks
    if colors is None:
        cells = [list(range(n))] if n else []
    else:
        groups: dict = {}
        for v in range(n):
            groups.setdefault(colors[v], []).append(v)
        cells = [groups[k] for k in sorted(groups)]
    best: list = [None, None]

    def search(cells):
        cells = _refine(masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(masks, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        reps = []
        for v in cell:
            if not any((masks[v] & ~(1 << r)) == (masks[r] & ~(1 << v)) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(cells)
    if n == 0:
        return 0, []
    return best[0], best[1]


def canonical_graph(g: Graph, colors: Sequence[int] | None = None) -> tuple[Graph, list[int]]:
    """Canonically relabeled copy and the map old vertex -> new vertex."""
    _, order = canonical_labeling(g, colors)
    perm = [0] * g.n
    for k, v in enumerate(order):
        perm[v] = k
    return g.relabel(perm), perm


def canonical_form(g: Graph, colors: Sequence[int] | None = None) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic (colour-preserving if ``colors`` given)."""
    cg, perm = canonical_graph(g, colors)
    s = emit_graph6(cg).encode()
    if colors is not None:
        inv = [0] * g.n
        for v, k in enumerate(perm):
            inv[k] = v
        s += b"|" + ",".join(str(colors[inv[k]]) for k in range(g.n)).encode()
    return s


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def vertex_orbits(g: Graph) -> list[list[int]]:
    """Automorphism orbits, found by canonical forms of the graph with one vertex coloured."""
    byform: dict[bytes, list[int]] = {}
    for v in range(g.n):
        colors = [1 if u == v else 0 for u in range(g.n)]
        byform.setdefault(canonical_form(g, colors), []).append(v)
    return sorted(byform.values())


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[bytes, Graph] = {}
    for base in _all_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            edges = list(base.edges) + [(v, n - 1) for v in range(n - 1) if mask >> v & 1]
            cg, _ = canonical_graph(Graph(n, edges))
            key = emit_graph6(cg).encode()
            if key not in seen:
                seen[key] = cg
    return tuple(sorted(seen.values(), key=lambda h: (h.m, emit_graph6(h))))


FILTERS = ("all", "connected", "two_connected")


def enumerate_graphs(n: int, filter: str = "all") -> Iterator[Graph]:
    """One representative per isomorphism class on ``n`` vertices, ordered by (m, graph6)."""
    if n > MAX_ENUM_N:
        raise GraphError(f"enumeration limited to n <= {MAX_ENUM_N}")
    if filter not in FILTERS:
        raise ValueError(f"filter must be one of {FILTERS}")
    for g in _all_graphs(n):
        if filter == "connected" and not g.is_connected():
            continue
        if filter == "two_connected" and not g.is_two_connected():
            continue
        yield g


def brute_force_classes(n: int) -> list[Graph]:
    """Every edge subset of K_n, deduplicated by canonical form.  Slow; for cross-checks only."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        seen.setdefault(canonical_form(g), g)
    return list(seen.values())
