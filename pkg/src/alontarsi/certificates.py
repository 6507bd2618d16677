"""JSON certificates and their independent re-verification.

Orientation certificate::

    {"kind": "orientation", "graph6": ..., "labels": [...], "orientation": "0110...",
     "EE": int, "EO": int}

claims that the orientation has out-degree at most ``d(v) - h(v) - 1`` everywhere and
the stated Eulerian counts with ``EE != EO``.

List certificate::

    {"kind": "lists", "graph6": ..., "labels": [...], "lists": [[...], ...]}

claims ``|L(v)| = d(v) - h(v)`` (when ``labels`` is given) and that no proper colouring exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ListAssignment, exists_proper_coloring
from .graph import GraphError, LabeledPair
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .orient import Orientation, eulerian_counts_bruteforce, eulerian_counts


class CertificateError(ValueError):
    """Malformed certificate."""


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    message: str


def orientation_certificate(p: LabeledPair, d: Orientation) -> dict:
    c = eulerian_counts(d)
    return {"kind": "orientation", "graph6": emit_graph6(p.graph), "labels": list(p.labels),
            "orientation": d.bitstring(), "EE": c.even, "EO": c.odd}


def list_certificate(p: LabeledPair, lists: ListAssignment) -> dict:
    return {"kind": "lists", "graph6": emit_graph6(p.graph), "labels": list(p.labels),
            "lists": lists.to_json()}


def _field(obj: dict, key: str, kind):
    if key not in obj:
        raise CertificateError(f"missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise CertificateError(f"field {key!r} has the wrong type")
    return val


def _pair(obj: dict) -> LabeledPair:
    try:
        g = parse_graph6(_field(obj, "graph6", str))
    except Graph6Error as e:
        raise CertificateError(f"bad graph6: {e}") from e
    labels = obj.get("labels", [0] * g.n)
    if not isinstance(labels, list) or not all(isinstance(h, int) for h in labels):
        raise CertificateError("labels must be a list of integers")
    try:
        return LabeledPair(g, tuple(labels))
    except GraphError as e:
        raise CertificateError(str(e)) from e


def verify_orientation_certificate(obj: dict) -> CheckResult:
    p = _pair(obj)
    bits = _field(obj, "orientation", str)
    if len(bits) != p.graph.m or set(bits) - {"0", "1"}:
        raise CertificateError(f"orientation must be {p.graph.m} characters of 0/1")
    d = Orientation.from_bitstring(p.graph, bits)
    ee, eo = _field(obj, "EE", int), _field(obj, "EO", int)
    bound = p.degree_bound()
    out = d.out_degrees()
    over = [v for v in range(p.graph.n) if out[v] > bound[v] - 1]
    if over:
        return CheckResult(False, f"out-degree too large at vertices {over}")
    # recount from scratch with the plain enumerator when it is cheap enough
    c = eulerian_counts_bruteforce(d) if p.graph.m <= 20 else eulerian_counts(d, method="dp")
    if (c.even, c.odd) != (ee, eo):
        return CheckResult(False, f"claimed EE={ee}, EO={eo} but recount gives EE={c.even}, EO={c.odd}")
    if ee == eo:
        return CheckResult(False, "EE equals EO, so the orientation certifies nothing")
    return CheckResult(True, f"EE={c.even}, EO={c.odd}; out-degree bounds hold")


def verify_list_certificate(obj: dict) -> CheckResult:
    p = _pair(obj)
    raw = _field(obj, "lists", list)
    if len(raw) != p.graph.n or not all(isinstance(lst, list) for lst in raw):
        raise CertificateError(f"lists must hold {p.graph.n} lists")
    if not all(isinstance(c, int) and not isinstance(c, bool) for lst in raw for c in lst):
        raise CertificateError("colours must be integers")
    lists = ListAssignment(tuple(raw))
    if any(len(set(lst)) != len(lst) for lst in raw):
        return CheckResult(False, "a list repeats a colour")
    if "labels" in obj and lists.sizes() != p.degree_bound():
        return CheckResult(False, f"list sizes {lists.sizes()} differ from d - h = {p.degree_bound()}")
    col = exists_proper_coloring(p.graph, lists)
    if col is not None:
        return CheckResult(False, f"colouring exists: {col}")
    return CheckResult(True, "no proper colouring from these lists")


def verify_certificate(obj: dict) -> CheckResult:
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    kind = obj.get("kind")
    if kind == "orientation":
        return verify_orientation_certificate(obj)
    if kind == "lists":
        return verify_list_certificate(obj)
    raise CertificateError(f"unknown certificate kind {kind!r}")
