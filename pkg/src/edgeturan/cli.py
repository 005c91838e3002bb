"""Command-line front end.  Every subcommand prints JSON (one object per line
unless ``--pretty``), except ``enumerate`` and graph6 ``construct`` output.

Exit codes: 0 success, 1 failed verification or violated property,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import binom, cliques, colex, extremal, search
from .graph import GraphError, read_graph, to_edge_list, to_graph6


class UsageError(Exception):
    pass


def _emit(obj, args):
    if getattr(args, "pretty", False):
        print(json.dumps(obj, indent=2))
    else:
        print(json.dumps(obj, separators=(",", ":")))


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required here")


def _check_ranges(args):
    t = getattr(args, "t", None)
    if t is not None and t < 2:
        raise UsageError("--t must be at least 2")
    delta = getattr(args, "delta", None)
    if delta is not None and delta < 1:
        raise UsageError("--delta must be at least 1")
    edges = getattr(args, "edges", None)
    if edges is not None and edges < 0:
        raise UsageError("--edges must be non-negative")
    jobs = getattr(args, "jobs", None)
    if jobs is not None and jobs < 1:
        raise UsageError("--jobs must be at least 1")
    scale = getattr(args, "grid_scale", None)
    if scale is not None and scale <= 0:
        raise UsageError("--grid-scale must be positive")


def _read_input(path):
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        return read_graph(text)
    except GraphError as exc:
        raise UsageError(f"cannot parse graph: {exc}") from None


def cmd_value(args) -> int:
    _need(args, "delta", "edges")
    d = extremal.decompose(args.edges, args.delta)
    out = d.to_json()
    if args.total:
        out.update(kind="total", value=str(extremal.total_extremal_value(args.delta, args.edges)))
    else:
        _need(args, "t")
        if args.t < 3:
            raise UsageError("--t must be at least 3")
        out.update(kind="main", t=args.t, value=str(extremal.extremal_value(args.t, args.delta, args.edges)))
    _emit(out, args)
    return 0


def cmd_construct(args) -> int:
    _need(args, "t", "delta", "edges")
    try:
        g = extremal.build_extremal(args.t, args.delta, args.edges)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "edges":
        sys.stdout.write(to_edge_list(g))
    else:
        print(to_graph6(g))
    return 0


def cmd_count(args) -> int:
    g = _read_input(args.input)
    if args.t is not None:
        _emit({"m": g.m, "counts": {str(args.t): str(cliques.count_kt(g, args.t))}}, args)
    else:
        prof = cliques.clique_profile(g)
        _emit({"m": g.m, **prof.to_json()}, args)
    return 0


def cmd_check(args) -> int:
    _need(args, "delta")
    g = _read_input(args.input)
    try:
        if args.total:
            verdict = extremal.is_total_extremal(g, args.delta)
        else:
            _need(args, "t")
            if args.t < 3:
                raise UsageError("--t must be at least 3")
            verdict = extremal.is_extremal(g, args.t, args.delta)
    except extremal.DegreeBoundError as exc:
        raise UsageError(str(exc)) from None
    out = {"m": g.m, "delta": args.delta, "t": None if args.total else args.t,
           **verdict.to_json()}
    _emit(out, args)
    return 0


def cmd_verify(args) -> int:
    _need(args, "edges")
    kw = {"max_edges": args.max_edges, "jobs": args.jobs}
    reports = []
    try:
        if args.t is not None and args.delta is not None:
            if args.t < 3:
                raise UsageError("--t must be at least 3")
            reports.append(search.verify_main(args.edges, args.delta, args.t, **kw))
        if args.kr1:
            _need(args, "delta")
            reports.append(search.verify_total(args.edges, args.delta, **kw))
        if args.kk:
            _need(args, "t")
            if args.t < 3:
                raise UsageError("--t must be at least 3")
            reports.append(search.verify_kk(args.edges, args.t, **kw))
    except search.CapExceeded as exc:
        raise UsageError(str(exc)) from None
    if not reports:
        raise UsageError("nothing to verify: give --t and --delta, --kr1 or --kk")
    for rep in reports:
        _emit(rep.to_json(), args)
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_kk(args) -> int:
    _need(args, "edges", "t")
    d = colex.colex_decompose(args.edges)
    _emit({"m": args.edges, "t": args.t, "r": d.r, "s": d.s,
           "colex_kt": str(colex.colex_kt(args.edges, args.t)),
           "kk_bound_real": colex.kk_bound_real(args.edges, args.t)}, args)
    return 0


def cmd_props(args) -> int:
    results = binom.property_grids(args.grid_scale)
    for res in results:
        _emit({"grid": res.name, "checked": res.checked, "ok": res.ok,
               "failures": [list(map(str, f)) for f in res.failures[:10]]}, args)
    return 0 if all(res.ok for res in results) else 1


def cmd_enumerate(args) -> int:
    _need(args, "edges")
    try:
        for g in search.enumerate_graphs(search.EnumerationSpec(args.edges, args.delta),
                                         max_edges=args.max_edges, jobs=args.jobs):
            print(to_graph6(g))
    except search.CapExceeded as exc:
        raise UsageError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indented JSON")

    p = argparse.ArgumentParser(prog="edgeturan",
                                description="Maximum K_t counts under edge and degree bounds.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("value", parents=[common], help="extremal value for (t, delta, m)")
    s.add_argument("--t", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--edges", type=int)
    s.add_argument("--total", action="store_true", help="total clique count instead of k_t")
    s.set_defaults(func=cmd_value)

    s = sub.add_parser("construct", parents=[common], help="print an extremal graph")
    s.add_argument("--t", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--edges", type=int)
    s.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("count", parents=[common], help="clique counts of an input graph")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--t", type=int)
    grp.add_argument("--all", action="store_true")
    s.add_argument("--input", help="graph6 or edge-list file (default: stdin)")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("check", parents=[common], help="is the input graph extremal?")
    s.add_argument("--t", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--total", action="store_true")
    s.add_argument("--input")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("verify", parents=[common], help="exhaustive check against the oracle")
    s.add_argument("--t", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--edges", type=int)
    s.add_argument("--max-edges", type=int, dest="max_edges")
    s.add_argument("--kr1", action="store_true", help="also verify the total-clique variant")
    s.add_argument("--kk", action="store_true", help="also verify the colex bound (no degree cap)")
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("kk", parents=[common], help="colex clique count and real bound")
    s.add_argument("--edges", type=int)
    s.add_argument("--t", type=int)
    s.set_defaults(func=cmd_kk)

    s = sub.add_parser("props", parents=[common], help="run the binomial inequality grids")
    s.add_argument("--grid-scale", type=float, default=1.0, dest="grid_scale")
    s.set_defaults(func=cmd_props)

    s = sub.add_parser("enumerate", parents=[common], help="stream graph6 of every class")
    s.add_argument("--edges", type=int)
    s.add_argument("--delta", type=int)
    s.add_argument("--max-edges", type=int, dest="max_edges")
    s.add_argument("--jobs", type=int)
    s.set_defaults(func=cmd_enumerate)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _check_ranges(args)
        return args.func(args)
    except UsageError as exc:
        print(f"edgeturan {args.command}: error: {exc}", file=sys.stderr)
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
