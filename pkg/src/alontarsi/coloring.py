"""List colouring, choosability and paintability deciders, and explicit bad list assignments."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import config
from .config import GuardError
from .graph import Graph, GraphError, LabeledPair
from .orient import is_f_at
from .structure import blocks, is_gallai_tree


@dataclass(frozen=True)
class ListAssignment:
    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "lists", tuple(frozenset(int(c) for c in lst) for lst in self.lists))

    @classmethod
    def uniform(cls, n: int, colors) -> "ListAssignment":
        return cls(tuple(frozenset(colors) for _ in range(n)))

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(lst) for lst in self.lists)

    def palette(self) -> frozenset[int]:
        return frozenset().union(*self.lists) if self.lists else frozenset()

    def to_json(self) -> list[list[int]]:
        return [sorted(lst) for lst in self.lists]


# -- plain list colouring ---------------------------------------------------------


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse of a smallest-last removal order; each vertex has few earlier neighbours."""
    alive = set(range(g.n))
    removed = []
    while alive:
        v = min(alive, key=lambda u: (len(g.neighbors(u) & alive), u))
        removed.append(v)
        alive.remove(v)
    return removed[::-1]


def _colorable_bits(masks: Sequence[int], order: Sequence[int], lists: Sequence[int]) -> list[int] | None:
    """Backtracking with lists as bitmasks of colours; returns colour index per vertex."""
    n = len(masks)
    color = [-1] * n
    pos = 0
    tried = [0] * n  # colours already tried at each position
    while 0 <= pos < len(order):
        v = order[pos]
        used = 0
        nb = masks[v]
        while nb:
            low = nb & -nb
            u = low.bit_length() - 1
            if color[u] >= 0:
                used |= 1 << color[u]
            nb ^= low
        avail = lists[v] & ~used & ~tried[pos]
        if avail:
            low = avail & -avail
            tried[pos] |= low
            color[v] = low.bit_length() - 1
            pos += 1
        else:
            tried[pos] = 0
            color[v] = -1
            pos -= 1
            if pos >= 0:
                color[order[pos]] = -1
    if pos < 0:
        return None
    return color


def exists_proper_coloring(g: Graph, lists: ListAssignment) -> list[int] | None:
    """A proper colouring from the lists (lowest colour first, degeneracy order), or ``None``."""
    if g.n > config.MAX_COLOR_VERTICES:
        raise GuardError("colouring vertices", g.n, config.MAX_COLOR_VERTICES)
    if len(lists.lists) != g.n:
        raise GraphError("one list per vertex required")
    palette = sorted(lists.palette())
    idx = {c: i for i, c in enumerate(palette)}
    bits = [sum(1 << idx[c] for c in lst) for lst in lists.lists]
    found = _colorable_bits(g.masks, degeneracy_order(g), bits)
    if found is None:
        return None
    return [palette[i] for i in found]


# -- choosability -----------------------------------------------------------------


def _sub_masks(g: Graph, mask: int) -> list[int]:
    return [g.masks[v] & mask if mask >> v & 1 else 0 for v in range(g.n)]


def _bits(mask: int) -> list[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _core_search(g: Graph, mask: int, f: Sequence[int]) -> list[int] | None:
    """Bad assignment on ``G[mask]`` whose colour classes each induce an edge.

    Colour classes are vertex sets; they are generated grouped by their least vertex
    (which is always the least vertex still short of colours) and in increasing order
    inside a group, so each multiset of classes appears once.  A branch stops as soon as
    the partial lists already allow a colouring, since adding colours cannot undo that.
    Returns the class masks or ``None``.
    """
    adj = _sub_masks(g, mask)
    verts = _bits(mask)
    order = [verts[i] for i in degeneracy_order(g.induced(verts)[0])]
    need = [0] * g.n
    for v in verts:
        need[v] = f[v]
    lists = [0] * g.n
    classes: list[int] = []

    def colorable() -> bool:
        return _colorable_bits(adj, order, lists) is not None

    def rec(prev: int) -> bool:
        open_ = [v for v in verts if need[v] > 0]
        if not open_:
            return not colorable()
        if all(lists[v] for v in verts) and colorable():
            return False
        v = open_[0]
        others = 0
        for u in open_[1:]:
            others |= 1 << u
        if not others:
            return False  # a class needs two vertices
        cands = []
        t = others
        while t:
            cls = t | (1 << v)
            if cls >= prev and any(adj[u] & cls for u in _bits(cls)):
                cands.append(cls)
            t = (t - 1) & others
        cands.sort()
        c = len(classes)
        for cls in cands:
            members = _bits(cls)
            for u in members:
                need[u] -= 1
                lists[u] |= 1 << c
            classes.append(cls)
            # the run for v continues only while v still needs colours
            if rec(cls if need[v] > 0 else 0):
                return True
            classes.pop()
            for u in members:
                need[u] += 1
                lists[u] &= ~(1 << c)
        return False

    return list(classes) if rec(0) else None


def _component_masks(g: Graph, mask: int) -> list[int]:
    return [sum(1 << v for v in comp) for comp in g.components(_bits(mask))]


def _low_degree_core(g: Graph, mask: int, f: Sequence[int]) -> int:
    """Repeatedly drop vertices with ``f(v) > d(v)``; they can always be coloured last."""
    changed = True
    while changed:
        changed = False
        for v in _bits(mask):
            if f[v] > bin(g.masks[v] & mask).count("1"):
                mask &= ~(1 << v)
                changed = True
    return mask


def _choose_bad_classes(g: Graph, f: Sequence[int]):
    memo: dict[int, list | None] = {}

    def bad(mask: int):
        if mask in memo:
            return memo[mask]
        core = _low_degree_core(g, mask, f)
        if core == 0:
            out = None
        elif core != mask:
            out = bad(core)
        else:
            comps = _component_masks(g, mask)
            if len(comps) > 1:
                out = next((b for b in map(bad, comps) if b is not None), None)
            else:
                out = None
                for v in _bits(mask):
                    out = bad(mask & ~(1 << v))
                    if out is not None:
                        break
                if out is None:
                    found = _core_search(g, mask, f)
                    if found is not None:
                        out = (mask, found)
        memo[mask] = out
        return out

    return bad((1 << g.n) - 1)


def is_f_choosable(g: Graph, f: Sequence[int]) -> ListAssignment | None:
    """A list assignment with ``|L(v)| = f(v)`` and no proper colouring, or ``None`` if ``G`` is f-choosable."""
    f = tuple(f)
    if len(f) != g.n:
        raise GraphError("degree bound length must equal n")
    if g.n > config.MAX_CHOOSE_VERTICES:
        raise GuardError("choosability vertices", g.n, config.MAX_CHOOSE_VERTICES)
    if sum(max(0, fv) for fv in f) > config.MAX_CHOOSE_PALETTE:
        raise GuardError("choosability palette", sum(f), config.MAX_CHOOSE_PALETTE)
    if g.n == 0:
        return None
    if any(fv <= 0 for fv in f):
        lists = [set() for _ in range(g.n)]
        nxt = 1
        for v in range(g.n):
            for _ in range(max(0, f[v])):
                lists[v].add(nxt)
                nxt += 1
        return ListAssignment(tuple(lists))
    found = _choose_bad_classes(g, f)
    if found is None:
        return None
    mask, classes = found
    lists = [set() for _ in range(g.n)]
    for c, cls in enumerate(classes, start=1):
        for v in _bits(cls):
            lists[v].add(c)
    # vertices outside the bad core get fresh colours
    nxt = len(classes) + 1
    for v in range(g.n):
        while len(lists[v]) < f[v]:
            lists[v].add(nxt)
            nxt += 1
    out = ListAssignment(tuple(lists))
    assert exists_proper_coloring(g, out) is None
    return out


# -- paintability -----------------------------------------------------------------


def _maximal_independent_subsets(adj: Sequence[int], s: int) -> list[int]:
    """All maximal independent sets of ``G[s]`` (Bron-Kerbosch on the complement)."""
    out = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        while p:
            low = p & -p
            v = low.bit_length() - 1
            nonnb = s & ~adj[v] & ~low
            bk(r | low, p & nonnb, x & nonnb)
            p ^= low
            x |= low

    bk(0, s, 0)
    return out


def is_f_paintable(g: Graph, f: Sequence[int]) -> bool:
    """Exact value of the online list-colouring game.

    ``G`` is f-paintable if it is empty, or ``f >= 1`` everywhere and for every nonempty
    vertex set ``S`` some independent ``I`` in ``S`` leaves ``G - I`` paintable with
    ``f`` lowered by one on ``S - I``.  Taking ``I`` maximal loses nothing, vertices with
    ``f(v) > d(v)`` are dropped, and components are played separately.
    """
    f = tuple(f)
    if len(f) != g.n:
        raise GraphError("degree bound length must equal n")
    if g.n > config.MAX_PAINT_VERTICES:
        raise GuardError("paintability vertices", g.n, config.MAX_PAINT_VERTICES)
    adj_all = g.masks

    @lru_cache(maxsize=None)
    def win(mask: int, fs: tuple) -> bool:
        fv = dict(zip(_bits(mask), fs))
        changed = True
        while changed:
            changed = False
            for v in list(fv):
                if fv[v] > bin(adj_all[v] & mask).count("1"):
                    mask &= ~(1 << v)
                    del fv[v]
                    changed = True
        if not mask:
            return True
        if any(k <= 0 for k in fv.values()):
            return False
        comps = _component_masks(g, mask)
        if len(comps) > 1:
            return all(win(c, tuple(fv[v] for v in _bits(c))) for c in comps)
        adj = [adj_all[v] & mask for v in range(g.n)]
        s = mask
        while s:
            ok = False
            for ind in _maximal_independent_subsets(adj, s):
                rest = mask & ~ind
                ok = win(rest, tuple(fv[v] - (1 if s >> v & 1 else 0) for v in _bits(rest)))
                if ok:
                    break
            if not ok:
                return False
            s = (s - 1) & mask
        return True

    full = (1 << g.n) - 1
    return win(full, f)


# -- explicit bad lists -----------------------------------------------------------


def bad_lists_for_d(p: LabeledPair, membership) -> ListAssignment:
    """Lists of size ``d - h_x`` with no colouring, for a member of the seed family.

    T-graphs: ``{1,2,3}`` on the triangle, ``{1,2}`` elsewhere.  Spindle: ``{1,2,3}`` everywhere.
    """
    from .classifier import SPINDLE, TGraphWitness

    g = p.graph
    if not membership.member:
        raise ValueError("pair is not in the seed family")
    if membership.verdict == SPINDLE:
        out = ListAssignment.uniform(g.n, (1, 2, 3))
    else:
        w: TGraphWitness = membership.witness
        tri = set(w.triangle)
        out = ListAssignment(tuple(frozenset((1, 2, 3) if v in tri else (1, 2)) for v in range(g.n)))
    if out.sizes() != p.degree_bound():
        raise AssertionError(f"list sizes {out.sizes()} differ from {p.degree_bound()}")
    if exists_proper_coloring(g, out) is not None:
        raise AssertionError("bad lists admit a colouring")
    return out


def bad_lists_gallai(g: Graph) -> ListAssignment:
    """Degree-sized lists with no colouring: disjoint palettes per block, unioned at cut vertices."""
    if not is_gallai_tree(g):
        raise GraphError("graph is not a Gallai tree")
    lists = [set() for _ in range(g.n)]
    nxt = 1
    bd = blocks(g)
    for bverts, bedges in zip(bd.blocks, bd.block_edges):
        k = 2 * len(bedges) // len(bverts)  # blocks are regular
        palette = range(nxt, nxt + k)
        nxt += k
        for v in bverts:
            lists[v].update(palette)
    out = ListAssignment(tuple(lists))
    if out.sizes() != g.degrees:
        raise AssertionError("list sizes differ from degrees")
    if exists_proper_coloring(g, out) is not None:
        raise AssertionError("bad lists admit a colouring")
    return out


# -- three-way comparison -------------------------------------------------------


@dataclass
class EquivalenceReport:
    at: bool
    choosable: bool
    paintable: bool
    orientation: object = None
    bad_lists: ListAssignment | None = None
    certificates: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.at == self.choosable == self.paintable

    @property
    def chain_holds(self) -> bool:
        """AT implies paintable implies choosable."""
        return (not self.at or self.paintable) and (not self.paintable or self.choosable)


def compare_deciders(g: Graph, f: Sequence[int], symmetry: bool = True) -> EquivalenceReport:
    d = is_f_at(g, f, symmetry=symmetry)
    bad = is_f_choosable(g, f)
    paint = is_f_paintable(g, f)
    return EquivalenceReport(d is not None, bad is None, paint, d, bad)


def equivalence_check_hx(p: LabeledPair) -> EquivalenceReport:
    """AT, choosable and paintable verdicts for an h_x pair; ``agree`` says whether they coincide."""
    if not p.is_hx():
        raise GraphError(f"labels {p.labels} are not of h_x form")
    return compare_deciders(p.graph, p.degree_bound())
