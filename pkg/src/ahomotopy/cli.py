"""Command line front end.

Exit statuses: 0 success or certified, 1 negative answer, 2 a cone map was
found against an obstruction, 3 resource limit or undecided, 64 parse
error, 65 validation error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .cones import certify_no_cone_map, obstruction_cone, search_cone_maps
from .errors import (InternalLimit, InvalidCone, InvalidInput, InvalidMap, InvalidTarget,
                     NotAPath, ParseError, ResourceLimit)
from .graphs import DEFAULT_CAP, GraphMap, count_homomorphisms, is_graph_map, iter_homomorphisms
from .homotopy import Verdict, are_homotopic, nullhomotopic_in_cycle, path_homotopic_rel_endpoints
from .paths import StablePath, winding_number

OK, NEGATIVE, FOUND, LIMIT, PARSE, INVALID = 0, 1, 2, 3, 64, 65

VALIDATION_ERRORS = (InvalidCone, InvalidInput, InvalidMap, InvalidTarget, NotAPath)

# cross-check search in verify-counterexample only runs below this many maps
SMALL_INSTANCE = 2_000


class _Exit(Exception):
    def __init__(self, status, message=""):
        super().__init__(message)
        self.status = status


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _Exit(PARSE, f"{path}: {exc.strerror}") from exc


def _parse(path, parser, *args):
    try:
        return parser(_read(path), *args)
    except ParseError as exc:
        raise _Exit(PARSE, f"{path}:{exc}") from exc


def _load_map(path, src, tgt) -> tuple:
    n_src, n_tgt, assignment = _parse(path, formats.parse_map)
    if (n_src, n_tgt) != (src.num_vertices, tgt.num_vertices):
        raise _Exit(INVALID, f"{path}: map sizes {n_src} -> {n_tgt} do not match the graphs")
    return assignment


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_check_map(args) -> int:
    src = _parse(args.graph_src, formats.parse_graph)
    tgt = _parse(args.graph_tgt, formats.parse_graph)
    assignment = _load_map(args.map, src, tgt)
    if is_graph_map(src, tgt, assignment):
        print("valid graph map")
        return OK
    print("not a graph map")
    return NEGATIVE


def cmd_homotopic(args) -> int:
    src = _parse(args.graph_src, formats.parse_graph)
    tgt = _parse(args.graph_tgt, formats.parse_graph)
    maps = []
    for path in (args.map_a, args.map_b):
        assignment = _load_map(path, src, tgt)
        if not is_graph_map(src, tgt, assignment):
            raise _Exit(INVALID, f"{path}: not a graph map")
        maps.append(GraphMap(src, tgt, assignment))
    trace = are_homotopic(maps[0], maps[1], cap=args.cap)
    if trace is None:
        print("not homotopic")
        return NEGATIVE
    print(f"homotopic in {len(trace)} steps")
    if args.out:
        _emit(formats.format_trace(trace), args.out)
    return OK


def cmd_winding(args) -> int:
    g = _parse(args.graph, formats.parse_graph)
    word = _parse(args.path, formats.parse_path)
    print(winding_number(StablePath(g, word)))
    return OK


def cmd_contract(args) -> int:
    g = _parse(args.graph, formats.parse_graph)
    word = _parse(args.path, formats.parse_path)
    decision = nullhomotopic_in_cycle(StablePath(g, word), based=not args.free)
    if decision.verdict is Verdict.YES:
        print("contractible")
        if args.out:
            _emit(formats.format_grid(decision.certificate), args.out)
        return OK
    print(f"not contractible: winding {decision.certificate.winding}")
    return NEGATIVE


def cmd_path_homotopic(args) -> int:
    g = _parse(args.graph, formats.parse_graph)
    p = StablePath(g, _parse(args.path_a, formats.parse_path))
    q = StablePath(g, _parse(args.path_b, formats.parse_path))
    window = args.window
    if window is None:
        window = max(len(p.word), len(q.word)) + 1
    decision = path_homotopic_rel_endpoints(p, q, window, max_window=args.max_window)
    if decision.verdict is Verdict.YES:
        print(f"homotopic rel endpoints in {decision.certificate.rows} steps")
        if args.out:
            _emit(formats.format_grid(decision.certificate), args.out)
        return OK
    if decision.verdict is Verdict.NO:
        print("not homotopic rel endpoints")
        return NEGATIVE
    print(f"undecided at window {window}")
    return LIMIT


def cmd_verify_counterexample(args) -> int:
    cone = _parse(args.cone, formats.parse_cone)
    report = certify_no_cone_map(cone, cap=args.cap)
    _emit(report.to_text(), args.out)
    if not report.certified:
        return FOUND
    if args.search and len(report.entries) <= SMALL_INSTANCE:
        found = search_cone_maps(cone, obstruction_cone(cone), args.max_rows, args.max_cols, cap=args.cap)
        print(f"search rows<={args.max_rows} cols<={args.max_cols}: {len(found)} cone maps",
              file=sys.stderr)
        if found:
            return FOUND
    return OK


def cmd_enum_homs(args) -> int:
    src = _parse(args.graph_src, formats.parse_graph)
    tgt = _parse(args.graph_tgt, formats.parse_graph)
    if args.list:
        count = 0
        lines = []
        for a in iter_homomorphisms(src, tgt):
            count += 1
            if count > args.cap:
                raise ResourceLimit(f"more than {args.cap} homomorphisms")
            lines.append(" ".join(map(str, a)))
        print(count)
        if lines:
            print("\n".join(lines))
    else:
        print(count_homomorphisms(src, tgt, cap=args.cap))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ahomotopy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-map", help="check the hom condition for a map file")
    p.add_argument("graph_src")
    p.add_argument("graph_tgt")
    p.add_argument("map")
    p.set_defaults(func=cmd_check_map)

    p = sub.add_parser("homotopic", help="decide whether two maps are A-homotopic")
    p.add_argument("graph_src")
    p.add_argument("graph_tgt")
    p.add_argument("map_a")
    p.add_argument("map_b")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out", help="write the homotopy trace here")
    p.set_defaults(func=cmd_homotopic)

    p = sub.add_parser("winding", help="winding number of a closed walk in C_n")
    p.add_argument("graph")
    p.add_argument("path")
    p.set_defaults(func=cmd_winding)

    p = sub.add_parser("contract", help="contract a closed walk in C_n, with a grid certificate")
    p.add_argument("graph")
    p.add_argument("path")
    p.add_argument("--free", action="store_true", help="allow the base point to move")
    p.add_argument("--out", help="write the grid here")
    p.set_defaults(func=cmd_contract)

    p = sub.add_parser("path-homotopic", help="grid search for a homotopy of paths rel endpoints")
    p.add_argument("graph")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--window", type=int, help="grid width in steps (default: longer path + 2)")
    p.add_argument("--max-window", type=int,
                   help="report a negative answer once the search at this width is exhausted")
    p.add_argument("--out", help="write the grid here")
    p.set_defaults(func=cmd_path_homotopic)

    p = sub.add_parser("verify-counterexample",
                       help="certify that no cone map into the obstruction cone exists")
    p.add_argument("cone")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--max-rows", type=int, default=4)
    p.add_argument("--max-cols", type=int, default=10)
    p.add_argument("--no-search", dest="search", action="store_false",
                   help="skip the bounded brute-force cross-check")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify_counterexample)

    p = sub.add_parser("enum-homs", help="count (and list) graph maps")
    p.add_argument("graph_src")
    p.add_argument("graph_tgt")
    p.add_argument("--list", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_enum_homs)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        if str(exc):
            print(str(exc), file=sys.stderr)
        return exc.status
    except (ResourceLimit, InternalLimit) as exc:
        print(f"limit: {exc}", file=sys.stderr)
        return LIMIT
    except VALIDATION_ERRORS as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
