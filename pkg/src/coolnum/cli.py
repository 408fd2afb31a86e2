"""Command-line front end.

Exit codes: 0 success, 1 bad input or failed verification, 2 graph exceeds
the solver cap, 3 disconnected input, 4 strategy/family mismatch, 5 unknown
verification suite. All output is randomness-free; repeated runs with the
same flags produce byte-identical output. The environment variable
``COOLNUM_MAX_NODES`` overrides the default solver caps.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify
from .bounds import bounds_report
from .engine import validate_sequence, write_trace
from .generators import (
    gen_complete_caterpillar,
    gen_cycle,
    gen_grid,
    gen_path,
    gen_spider,
)
from .graph_io import export_dot, read_graph, write_graph
from .graphs import DisconnectedGraphError, GraphError
from .ilt import ilt_t
from .solver import (
    GraphTooLargeError,
    SearchLimits,
    burning_number,
    cooling_number,
    default_burning_cap,
    default_cooling_cap,
    max_sequence_length,
)
from .strategies import (
    StrategyError,
    caterpillar_strategy_trace,
    closed_form,
    grid_cl_window,
    grid_simplicial_strategy,
    ilt_path_strategy_trace,
    spider_strategy,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OVER_LIMIT = 2
EXIT_DISCONNECTED = 3
EXIT_STRATEGY_MISMATCH = 4
EXIT_UNKNOWN_SUITE = 5


def _emit(obj: dict, as_json: bool, plain: str) -> None:
    if as_json:
        print(json.dumps(obj, separators=(", ", ": ")))
    else:
        print(plain)


def _parse_base(spec: str):
    """Parse a ``family:param`` base-graph spec, e.g. ``path:6``."""
    family, _, raw = spec.partition(":")
    if not raw:
        raise GraphError(f"base spec {spec!r} must look like family:param (e.g. path:6)")
    n = int(raw)
    builders = {"path": gen_path, "cycle": gen_cycle, "grid": gen_grid,
                "caterpillar": gen_complete_caterpillar}
    if family not in builders:
        raise GraphError(f"unknown base family {family!r}")
    return builders[family](n)


def cmd_gen(args) -> int:
    if args.family == "path":
        g = gen_path(args.n)
    elif args.family == "cycle":
        g = gen_cycle(args.n)
    elif args.family == "grid":
        g = gen_grid(args.n)
    elif args.family == "caterpillar":
        g = gen_complete_caterpillar(args.d)
    elif args.family == "spider":
        g = gen_spider(args.legs, args.r)
    elif args.family == "ilt":
        g = ilt_t(_parse_base(args.base), args.t).graph
    else:  # pragma: no cover - argparse restricts choices
        raise GraphError(f"unknown family {args.family}")
    write_graph(g, args.out)
    if args.dot:
        export_dot(g, args.dot, grid_side=args.n if args.family == "grid" else None)
    _emit({"command": "gen", "family": args.family, "n": g.n, "edges": g.num_edges,
           "out": args.out}, args.json, f"n={g.n} edges={g.num_edges}")
    return EXIT_OK


def _limits(args) -> SearchLimits:
    return SearchLimits(max_nodes=args.max_nodes, time_budget=args.time_budget)


def _run_solver(args, solve, value_name: str) -> int:
    g = read_graph(args.graph_in)
    result = solve(g)
    if args.trace_out:
        write_trace(result.witness, args.trace_out)
    _emit({"command": value_name, "value": result.value,
           "rounds": result.witness.num_rounds,
           "sources": list(result.witness.sources)},
          args.json, str(result.value))
    return EXIT_OK


def cmd_exact(args) -> int:
    if args.max_nodes is None:
        args.max_nodes = default_cooling_cap()
    return _run_solver(
        args,
        lambda g: cooling_number(g, _limits(args), prune=not args.no_prune,
                                 use_memo=not args.no_memo, jobs=args.jobs),
        "exact",
    )


def cmd_seqlen(args) -> int:
    if args.max_nodes is None:
        args.max_nodes = default_cooling_cap()
    return _run_solver(
        args,
        lambda g: max_sequence_length(g, _limits(args), prune=not args.no_prune,
                                      use_memo=not args.no_memo, jobs=args.jobs),
        "seqlen",
    )


def cmd_burn(args) -> int:
    if args.max_nodes is None:
        args.max_nodes = default_burning_cap()
    return _run_solver(args, lambda g: burning_number(g, _limits(args)), "burn")


def cmd_bounds(args) -> int:
    g = read_graph(args.graph_in)
    report = bounds_report(g)
    print(json.dumps(report.to_json_obj(), separators=(", ", ": ")))
    return EXIT_OK


def cmd_strategy(args) -> int:
    name = args.name
    certified = None
    if name == "grid-simplicial":
        if args.n is None:
            raise StrategyError("grid-simplicial needs --n")
        trace = grid_simplicial_strategy(args.n)
        if args.n >= 2:
            certified = grid_cl_window(args.n)
    elif name == "path-diameter":
        if not args.graph_in:
            raise StrategyError("path-diameter needs --in")
        from .strategies import path_diameter_strategy

        g = read_graph(args.graph_in)
        trace = validate_sequence(g, path_diameter_strategy(g))
    elif name == "caterpillar":
        if args.d is None:
            raise StrategyError("caterpillar needs --d")
        trace = caterpillar_strategy_trace(args.d)
        certified = closed_form("caterpillar", {"d": args.d})
    elif name == "spider":
        if args.m is None or args.r is None:
            raise StrategyError("spider needs --m and --r")
        res = spider_strategy(args.m, args.r)
        trace, certified = res.trace, res.certified
    elif name == "ilt-path":
        if args.n is None or args.t is None:
            raise StrategyError("ilt-path needs --n and --t")
        trace = ilt_path_strategy_trace(args.n, args.t)
        certified = closed_form("ilt_path", {"n": args.n, "t": args.t})
    else:  # pragma: no cover - argparse restricts choices
        raise StrategyError(f"unknown strategy {name}")
    if args.trace_out:
        write_trace(trace, args.trace_out)
    obj = {"command": "strategy", "name": name, "rounds": trace.num_rounds,
           "sources": list(trace.sources),
           "certified": certified.to_json_obj() if certified else None}
    plain = f"rounds={trace.num_rounds}"
    if certified is not None:
        if certified.kind == "window":
            plain += f" window=[{certified.lo}, {certified.hi}]"
        elif certified.kind == "exact":
            plain += f" certified={certified.lo}"
        else:
            plain += f" lower_bound={certified.lo}"
    _emit(obj, args.json, plain)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify.run_suite(args.suite)
    except verify.UnknownSuiteError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_UNKNOWN_SUITE
    for row in report.rows:
        mark = "ok  " if row.ok else "FAIL"
        passed = row.instances - len(row.failures)
        print(f"{mark} {report.suite}: {row.name} [{passed}/{row.instances}]")
        for failure in row.failures:
            print(f"     - {failure}")
    return EXIT_OK if report.ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coolnum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph and write its JSON file")
    p.add_argument("family", choices=["path", "cycle", "grid", "caterpillar", "spider", "ilt"])
    p.add_argument("--n", type=int, help="order parameter (path/cycle/grid, ilt-path strategy)")
    p.add_argument("--d", type=int, help="caterpillar length")
    p.add_argument("--legs", type=int, help="spider leg count")
    p.add_argument("--r", type=int, help="spider leg length")
    p.add_argument("--base", help="ilt base graph as family:param, e.g. path:6")
    p.add_argument("--t", type=int, default=1, help="ilt iterations")
    p.add_argument("--out", required=True)
    p.add_argument("--dot", help="also write a DOT rendering here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_gen)

    for name, func in (("exact", cmd_exact), ("seqlen", cmd_seqlen), ("burn", cmd_burn)):
        p = sub.add_parser(name, help=f"compute {name} value for a graph file")
        p.add_argument("--in", dest="graph_in", required=True)
        p.add_argument("--trace-out", help="write the witness trace JSON here")
        p.add_argument("--max-nodes", type=int, default=None)
        p.add_argument("--time-budget", type=float, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--no-prune", action="store_true")
        p.add_argument("--no-memo", action="store_true")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="print the bounds report for a graph file")
    p.add_argument("--in", dest="graph_in", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("strategy", help="run a named strategy and report its rounds")
    p.add_argument("name", choices=["grid-simplicial", "path-diameter", "caterpillar",
                                    "spider", "ilt-path"])
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--in", dest="graph_in")
    p.add_argument("--trace-out")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_strategy)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphTooLargeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_OVER_LIMIT
    except DisconnectedGraphError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DISCONNECTED
    except StrategyError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_STRATEGY_MISMATCH
    except (GraphError, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ERROR


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    console_main()
