"""Orientations, spanning Eulerian subgraph counts, and the exhaustive f-AT search."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import config
from .config import GuardError
from .graph import Graph, GraphError, LabeledPair
from .iso import canonical_form


@dataclass(frozen=True)
class Orientation:
    """Direction bit per edge index: 0 orients ``u -> v`` for the stored pair ``u < v``."""

    graph: Graph
    direction: tuple[int, ...]

    def __post_init__(self):
        d = tuple(int(b) for b in self.direction)
        object.__setattr__(self, "direction", d)
        if len(d) != self.graph.m or any(b not in (0, 1) for b in d):
            raise GraphError("direction must be one bit per edge")

    @classmethod
    def from_arcs(cls, g: Graph, arcs: Iterable[tuple[int, int]]) -> "Orientation":
        bits = [None] * g.m
        for a, b in arcs:
            i = g.edge_index(a, b)
            if bits[i] is not None:
                raise GraphError(f"edge {g.edges[i]} oriented twice")
            bits[i] = 0 if a < b else 1
        if None in bits:
            missing = [g.edges[i] for i, b in enumerate(bits) if b is None]
            raise GraphError(f"edges left unoriented: {missing}")
        return cls(g, tuple(bits))

    @classmethod
    def from_bitstring(cls, g: Graph, bits: str) -> "Orientation":
        return cls(g, tuple(int(c) for c in bits))

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) if b == 0 else (v, u) for (u, v), b in zip(self.graph.edges, self.direction)]

    def out_degrees(self) -> list[int]:
        out = [0] * self.graph.n
        for a, _ in self.arcs():
            out[a] += 1
        return out

    def in_degrees(self) -> list[int]:
        return [d - o for d, o in zip(self.graph.degrees, self.out_degrees())]

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(1 - b for b in self.direction))

    def bitstring(self) -> str:
        return "".join(map(str, self.direction))

    def respects(self, f: Sequence[int]) -> bool:
        """Every out-degree is at most ``f(v) - 1``."""
        return all(o <= fv - 1 for o, fv in zip(self.out_degrees(), f))


@dataclass(frozen=True)
class EulerCounts:
    even: int
    odd: int

    @property
    def diff(self) -> int:
        return self.even - self.odd

    @property
    def total(self) -> int:
        return self.even + self.odd

    @property
    def is_at(self) -> bool:
        return self.even != self.odd


# -- counting -----------------------------------------------------------------


def eulerian_counts_bruteforce(d: Orientation) -> EulerCounts:
    """Enumerate all 2^m arc subsets and keep the balanced ones."""
    arcs = d.arcs()
    n = d.graph.n
    even = odd = 0
    for mask in range(1 << len(arcs)):
        bal = [0] * n
        k = 0
        for i, (a, b) in enumerate(arcs):
            if mask >> i & 1:
                bal[a] += 1
                bal[b] -= 1
                k += 1
        if not any(bal):
            if k % 2:
                odd += 1
            else:
                even += 1
    return EulerCounts(even, odd)


def _elimination_order(g: Graph) -> list[int]:
    order: list[int] = []
    placed: set[int] = set()
    while len(order) < g.n:
        best = max(
            (v for v in range(g.n) if v not in placed),
            key=lambda v: (len(g.neighbors(v) & placed), -g.degree(v), -v),
        )
        order.append(best)
        placed.add(best)
    return order


_SHIFT = 6
_OFF = 32


@lru_cache(maxsize=4096)
def _dp_plan(g: Graph):
    """Edge processing order with, per edge, the slot shifts and remaining-degree bounds.

    Each vertex gets a 6-bit digit (balance + 32) in an int-encoded state; a digit is
    recycled once its vertex has no unprocessed edges.
    """
    order = _elimination_order(g)
    pos = {v: i for i, v in enumerate(order)}
    edge_ids = sorted(range(g.m), key=lambda i: (max(pos[g.edges[i][0]], pos[g.edges[i][1]]),
                                                  min(pos[g.edges[i][0]], pos[g.edges[i][1]])))
    remaining = list(g.degrees)
    slot: dict[int, int] = {}
    free: list[int] = []
    width = 0
    plan = []
    for i in edge_ids:
        u, v = g.edges[i]
        for w in (u, v):
            if w not in slot:
                if free:
                    slot[w] = free.pop()
                else:
                    slot[w] = width
                    width += 1
        remaining[u] -= 1
        remaining[v] -= 1
        plan.append((i, slot[u] * _SHIFT, slot[v] * _SHIFT, remaining[u], remaining[v]))
        for w in (u, v):
            if remaining[w] == 0:
                free.append(slot.pop(w))
    base = sum(_OFF << (k * _SHIFT) for k in range(max(width, 1)))
    return tuple(plan), base


def _eulerian_dp(g: Graph, direction: Sequence[int], signed: bool):
    """Dynamic programme over arcs keyed by the partial out-minus-in balance of open vertices.

    Returns ``EE - EO`` when ``signed`` else ``(EE, EO)``.
    """
    plan, base = _dp_plan(g)
    states: dict[int, object] = {base: 1 if signed else (1, 0)}
    for i, su, sv, ru, rv in plan:
        # tail/head shifts and their remaining-edge bounds
        if direction[i]:
            st, sh, rt, rh = sv, su, rv, ru
        else:
            st, sh, rt, rh = su, sv, ru, rv
        lo_t, hi_t = _OFF - rt, _OFF + rt
        lo_h, hi_h = _OFF - rh, _OFF + rh
        step = (1 << st) - (1 << sh)
        new: dict[int, object] = {}
        get = new.get
        for s, c in states.items():
            dt = (s >> st) & 63
            dh = (s >> sh) & 63
            if lo_t <= dt <= hi_t and lo_h <= dh <= hi_h:
                if signed:
                    new[s] = get(s, 0) + c
                else:
                    o = get(s, (0, 0))
                    new[s] = (o[0] + c[0], o[1] + c[1])
            dt += 1
            dh -= 1
            if lo_t <= dt <= hi_t and lo_h <= dh <= hi_h:
                t = s + step
                if signed:
                    new[t] = get(t, 0) - c
                else:
                    o = get(t, (0, 0))
                    new[t] = (o[0] + c[1], o[1] + c[0])
        states = new
        if not states:
            return 0 if signed else (0, 0)
    # every digit is back at the offset, so a single state survives
    if signed:
        return sum(states.values())
    return sum(c[0] for c in states.values()), sum(c[1] for c in states.values())


def eulerian_counts(d: Orientation, method: str = "auto") -> EulerCounts:
    """(EE, EO) for ``d``; the empty subgraph counts as even.

    ``method`` is ``"auto"``, ``"dp"`` or ``"brute"``.
    """
    m = d.graph.m
    if m > config.MAX_COUNT_EDGES:
        raise GuardError("counting edges", m, config.MAX_COUNT_EDGES,
                         "use coefficient_oracle for larger graphs")
    if method == "brute" or (method == "auto" and m < config.BRUTE_COUNT_EDGES):
        return eulerian_counts_bruteforce(d)
    if method not in ("auto", "dp"):
        raise ValueError(f"unknown method {method!r}")
    return EulerCounts(*_eulerian_dp(d.graph, d.direction, signed=False))


def eulerian_difference(d: Orientation) -> int:
    """``EE - EO`` only (cheaper than full counts)."""
    return _eulerian_dp(d.graph, d.direction, signed=True)


# -- f-AT search ----------------------------------------------------------


def indegree_demand(g: Graph, f: Sequence[int]) -> int:
    """Least total in-degree an orientation with ``d+(v) <= f(v) - 1`` needs."""
    return sum(max(0, d - fv + 1) for d, fv in zip(g.degrees, f))


def is_f_at(g: Graph, f: Sequence[int], exhaustive: bool = False,
            symmetry: bool = False) -> Orientation | None:
    """First orientation (edges in index order, direction 0 first) that is Alon-Tarsi
    with ``d+(v) <= f(v) - 1`` everywhere, or ``None``.

    The difference ``EE - EO`` of an orientation depends, up to sign, only on its
    out-degree sequence, so by default each out-degree sequence is evaluated once and
    failed ``(edge, partial out-degrees)`` states are memoized.  ``exhaustive=True``
    evaluates every admissible orientation instead.

    ``symmetry=True`` also skips an out-degree sequence when an automorphism of
    ``(G, f)`` maps it to one already found to give ``EE = EO``.  Only zero-valued
    sequences are skipped, so the returned witness is the same either way.
    """
    f = tuple(f)
    if len(f) != g.n:
        raise GraphError("degree bound length must equal n")
    if g.m > config.MAX_SEARCH_EDGES:
        raise GuardError("search edges", g.m, config.MAX_SEARCH_EDGES)
    if any(fv <= 0 for fv in f):
        return None
    if indegree_demand(g, f) > g.m:
        return None
    cap = [fv - 1 for fv in f]
    edges = g.edges
    m = g.m
    out = [0] * g.n
    bits = [0] * m
    failed: set = set()
    seen_scores: dict[tuple, bool] = {}
    zero_orbits: set[bytes] = set()

    def leaf() -> bool:
        score = tuple(out)
        if not exhaustive and score in seen_scores:
            return seen_scores[score]
        if symmetry:
            key = canonical_form(g, [(fv, o) for fv, o in zip(f, score)])
            if key in zero_orbits:
                seen_scores[score] = False
                return False
        ok = _eulerian_dp(g, bits, signed=True) != 0
        seen_scores[score] = ok
        if symmetry and not ok:
            zero_orbits.add(key)
        return ok

    def dfs(k: int) -> bool:
        if k == m:
            return leaf()
        key = (k, tuple(out))
        if not exhaustive and key in failed:
            return False
        u, v = edges[k]
        for b, tail in ((0, u), (1, v)):
            if out[tail] < cap[tail]:
                out[tail] += 1
                bits[k] = b
                if dfs(k + 1):
                    return True
                out[tail] -= 1
        if not exhaustive:
            failed.add(key)
        return False

    if dfs(0):
        return Orientation(g, tuple(bits))
    return None


def is_pair_at(p: LabeledPair, exhaustive: bool = False, symmetry: bool = False) -> Orientation | None:
    """``(G, h)`` is AT iff ``G`` is ``(d_G - h)``-AT."""
    return is_f_at(p.graph, p.degree_bound(), exhaustive=exhaustive, symmetry=symmetry)


def is_degree_at(g: Graph, symmetry: bool = False) -> Orientation | None:
    return is_f_at(g, g.degrees, symmetry=symmetry)
