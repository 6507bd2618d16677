"""Command-line entry point.

Exit codes: 0 ok, 1 mismatch or refuted claim, 2 usage or malformed input, 3 size guard refusal.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import config
from .certificates import CertificateError, list_certificate, orientation_certificate, verify_certificate
from .classifier import classify_connected, classify_two_connected, membership_d
from .coloring import ListAssignment, bad_lists_for_d, bad_lists_gallai, exists_proper_coloring, is_f_choosable
from .config import GuardError
from .graph import GraphError, LabeledPair
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .orient import Orientation, is_pair_at
from .structure import is_gallai_tree
from .sweeps import MODES, SCOPES, search_two_marked, verify
from .witness import find_at_witness_subgraph

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def jsonable(obj):
    """Plain JSON view of verdicts, witnesses and reports."""
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if isinstance(obj, Orientation):
        return obj.bitstring()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    return obj


def _emit(obj, output: str | None = None):
    text = json.dumps(jsonable(obj), indent=2)
    if output:
        with open(output, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _not_at_lists(p: LabeledPair):
    """Bad lists for a not-AT h_x pair: explicit construction when one applies, else search."""
    g = p.graph
    if g.is_two_connected():
        mem = membership_d(p)
        if mem.member:
            return bad_lists_for_d(p, mem)
    if is_gallai_tree(g):
        # shrinking a list keeps the Gallai-tree assignment uncolourable
        lists = list(bad_lists_gallai(g).lists)
        lists[p.x] = frozenset(sorted(lists[p.x])[1:])
        cand = ListAssignment(tuple(lists))
        assert exists_proper_coloring(g, cand) is None
        return cand
    return is_f_choosable(g, p.degree_bound())


def classify_one(g6: str, x: int, y: int | None, certify: bool, oracle: bool) -> tuple[dict, int]:
    g = parse_graph6(g6)
    marked = (x,) if y is None else (x, y)
    p = LabeledPair.marked(g, *marked)
    out: dict = {"graph6": emit_graph6(g), "x": x}
    code = EXIT_OK
    if y is not None:
        out["y"] = y
        d = is_pair_at(p, symmetry=True)
        out.update(at=d is not None, case="oracle_only")
        if certify:
            if d is not None:
                out["certificate"] = orientation_certificate(p, d)
            else:
                bad = is_f_choosable(g, p.degree_bound())
                out["certificate"] = list_certificate(p, bad) if bad is not None else None
        return out, code
    if not g.is_connected():
        raise GraphError("classification needs a connected graph")
    conn = classify_connected(p)
    if g.is_two_connected():
        main = classify_two_connected(p)
        out.update(at=main.at, case=main.case_tag, witness=main.witness, connected_case=conn.case_tag)
    else:
        out.update(at=conn.at, case=conn.case_tag, witness=conn.witness)
    if oracle:
        o = is_pair_at(p, symmetry=True) is not None
        out["oracle_at"] = o
        if o != out["at"]:
            code = EXIT_MISMATCH
    if certify:
        if out["at"]:
            w = find_at_witness_subgraph(p)
            out["certificate"] = orientation_certificate(p, w.orientation)
            out["certificate_kind"] = w.kind
        else:
            bad = _not_at_lists(p)
            out["certificate"] = list_certificate(p, bad) if bad is not None else None
    return out, code


def cmd_classify(args) -> int:
    if args.x is None:
        raise GraphError("--x is required")
    inputs = []
    if args.graph6:
        inputs.append(args.graph6)
    if args.input:
        with open(args.input) as fh:
            inputs += [line.strip() for line in fh if line.strip() and not line.startswith("#")]
    if not inputs:
        raise GraphError("give a graph6 string or --input FILE")
    results, code = [], EXIT_OK
    for g6 in inputs:
        res, c = classify_one(g6, args.x, args.y, args.certify, args.oracle)
        results.append(res)
        code = max(code, c)
    _emit(results[0] if len(results) == 1 else results, args.output)
    return code


def cmd_verify(args) -> int:
    report = verify(args.scope, args.n, jobs=args.jobs, checkpoint=args.checkpoint)
    _emit(report, args.output)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_search(args) -> int:
    cat = search_two_marked(args.n, args.mode, two_connected=args.two_connected,
                            unstretched=args.unstretched)
    _emit(cat, args.output)
    return EXIT_OK


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise CertificateError(f"not JSON: {e}") from e


def _check(obj) -> int:
    res = verify_certificate(obj)
    print(("ACCEPTED: " if res.ok else "REJECTED: ") + res.message)
    return EXIT_OK if res.ok else EXIT_MISMATCH


def cmd_verify_certificate(args) -> int:
    return _check(_load_json(args.file))


def cmd_verify_lists(args) -> int:
    obj = _load_json(args.file)
    if isinstance(obj, dict):
        obj = {**obj, "kind": "lists"}
    return _check(obj)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="alontarsi", description="Alon-Tarsi orientation tools")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one pair (G, h_x) or (G, h_{x,y})")
    c.add_argument("graph6", nargs="?")
    c.add_argument("--x", type=int)
    c.add_argument("--y", type=int)
    c.add_argument("--certify", action="store_true", help="attach an orientation or bad-list certificate")
    c.add_argument("--oracle", action="store_true", help="confirm with the exhaustive search")
    c.add_argument("--input", help="file of graph6 lines")
    c.add_argument("--output")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="exhaustive sweep against the oracles")
    v.add_argument("--scope", choices=SCOPES, required=True)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--checkpoint")
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="pairs (G, h_{x,y}) failing a property")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mode", choices=MODES, default="at")
    s.add_argument("--two-connected", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--unstretched", action=argparse.BooleanOptionalAction, default=True)
    s.add_argument("--jobs", type=int, default=1, help="ignored; the search runs serially")
    s.add_argument("--output")
    s.set_defaults(func=cmd_search)

    vc = sub.add_parser("verify-certificate", help="re-check an orientation or list certificate")
    vc.add_argument("file")
    vc.set_defaults(func=cmd_verify_certificate)

    vl = sub.add_parser("verify-lists", help="re-check a bad-list certificate")
    vl.add_argument("file")
    vl.set_defaults(func=cmd_verify_lists)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args)
    except GuardError as e:
        print(f"refused: {e}; limits {config.snapshot()}", file=sys.stderr)
        return EXIT_GUARD
    except (Graph6Error, GraphError, CertificateError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
