"""Graph-polynomial coefficient check, independent of orientation counting.

Expands ``prod_{u<v, uv in E} (x_u - x_v)`` in exact integers, discarding any
monomial whose exponent at some ``v`` already exceeds ``f(v) - 1`` (exponents
only grow, so such terms never come back).
"""

from __future__ import annotations

from typing import Sequence

from . import config
from .config import GuardError
from .graph import Graph

_BITS = 5


def truncated_graph_polynomial(g: Graph, f: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Nonzero coefficients of monomials with exponent ``e_v <= f(v) - 1`` for every ``v``."""
    if g.m > config.MAX_COEFF_EDGES:
        raise GuardError("coefficient edges", g.m, config.MAX_COEFF_EDGES)
    if g.n > config.MAX_COEFF_VERTICES:
        raise GuardError("coefficient vertices", g.n, config.MAX_COEFF_VERTICES)
    if any(fv <= 0 for fv in f):
        return {}
    cap = [fv - 1 for fv in f]
    mask = (1 << _BITS) - 1
    terms: dict[int, int] = {0: 1}
    for u, v in g.edges:
        su, sv = u * _BITS, v * _BITS
        cu, cv = cap[u], cap[v]
        new: dict[int, int] = {}
        for mono, c in terms.items():
            if (mono >> su) & mask < cu:
                k = mono + (1 << su)
                new[k] = new.get(k, 0) + c
            if (mono >> sv) & mask < cv:
                k = mono + (1 << sv)
                new[k] = new.get(k, 0) - c
        terms = {k: c for k, c in new.items() if c}
        if not terms:
            break
    return {tuple((mono >> (v * _BITS)) & mask for v in range(g.n)): c for mono, c in terms.items()}


def coefficient_oracle(g: Graph, f: Sequence[int]) -> bool:
    """True iff some admissible monomial has a nonzero coefficient."""
    return bool(truncated_graph_polynomial(g, f))
