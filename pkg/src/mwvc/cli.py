"""Command-line interface.

Subcommands:

  solve    full pipeline: reduce, decompose, branch-and-bound
  reduce   reduction rules only; optionally emits the reduced graph
  oracle   brute-force reference solver (small graphs only)
  verify   check a solution file against a graph

Exit codes: 0 success (for solve: optimality proved; for verify: the file
is a valid cover), 2 a resource budget expired and a valid incumbent was
emitted, 1 input error (or an invalid cover for verify).
"""

from __future__ import annotations

import argparse
import sys

from .branching import HEURISTIC_KINDS, HeuristicChoice
from .graph import GraphError, is_vertex_cover, cover_weight
from .graphio import (parse_graph, read_solution, write_edge_list,
                      write_solution, write_weights)
from .oracle import brute_force_mwvc
from .report import (graph_section, load_section, reduction_section, render,
                     solve_report)
from .reductions import reduce_graph
from .search import Budget, solve


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="graph file")
    p.add_argument("--format", default="auto",
                   choices=("auto", "edge-list", "matrix-market", "dimacs"))
    p.add_argument("--indexing", default="auto",
                   choices=("auto", "0-based", "1-based"),
                   help="vertex numbering of edge-list files")
    p.add_argument("--weights", default=None, metavar="SCHEME|FILE",
                   help="weight scheme (unit, i-mod-200, "
                        "i-mod-200-zero-based, const:K) or sidecar file")
    p.add_argument("--output", default="text", choices=("text", "json"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwvc",
        description="Exact minimum weight vertex cover solver for sparse graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve to proven optimality")
    _add_input_args(p)
    p.add_argument("--heuristic", default="h1", choices=HEURISTIC_KINDS,
                   help="branching strategy (default h1: greatest degree)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the h2 random branching strategy")
    p.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
    p.add_argument("--node-limit", type=int, default=None, metavar="N")
    p.add_argument("--no-reductions", action="store_true",
                   help="skip the reduction rules (search the raw graph)")
    p.add_argument("--zero-weight-rule", action="store_true",
                   help="also take zero-weight vertices with edges for free")
    p.add_argument("--parallel-components", action="store_true",
                   help="search disjoint components concurrently")
    p.add_argument("--solution-out", default=None, metavar="PATH",
                   help="write the cover, one vertex id per line")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="apply reduction rules only")
    _add_input_args(p)
    p.add_argument("--zero-weight-rule", action="store_true")
    p.add_argument("--graph-out", default=None, metavar="PATH",
                   help="write the reduced graph as a remapped edge list")
    p.add_argument("--weights-out", default=None, metavar="PATH",
                   help="sidecar weights for --graph-out "
                        "(default: PATH.weights)")
    p.add_argument("--cover-out", default=None, metavar="PATH",
                   help="write the forced partial cover")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force reference (<= 20 vertices)")
    _add_input_args(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check a cover file against a graph")
    _add_input_args(p)
    p.add_argument("cover", help="solution file, one vertex id per line")
    p.set_defaults(func=cmd_verify)

    return parser


def cmd_solve(args) -> int:
    g, load = parse_graph(args.graph, args.format, args.indexing, args.weights)
    one_based = load.indexing == "1-based"
    heuristic = HeuristicChoice(args.heuristic, args.seed)
    budget = Budget(time_limit=args.time_limit, node_limit=args.node_limit)
    result = solve(g, heuristic=heuristic, budget=budget,
                   reductions_enabled=not args.no_reductions,
                   parallel_components=args.parallel_components,
                   zero_weight_rule=args.zero_weight_rule)
    if args.solution_out:
        write_solution(args.solution_out, result.cover, one_based)
    config = {
        "command": "solve",
        "heuristic": args.heuristic,
        "seed": args.seed,
        "time_limit": args.time_limit,
        "node_limit": args.node_limit,
        "reductions": not args.no_reductions,
        "zero_weight_rule": args.zero_weight_rule,
        "parallel_components": args.parallel_components,
    }
    print(render(solve_report(load, result, config, one_based), args.output))
    return 0 if result.optimal else 2


def cmd_reduce(args) -> int:
    g, load = parse_graph(args.graph, args.format, args.indexing, args.weights)
    one_based = load.indexing == "1-based"
    outcome = reduce_graph(g, zero_weight_rule=args.zero_weight_rule)
    n_subgraphs = sum(1 for comp in g.components() if len(comp) > 1)

    report = {
        "instance": load.name,
        "graph": graph_section(load),
        "load": load_section(load),
        "config": {
            "command": "reduce",
            "zero_weight_rule": args.zero_weight_rule,
        },
        "reduction": reduction_section(True, g.n_alive, n_subgraphs, outcome),
    }
    if args.graph_out:
        kept = write_edge_list(args.graph_out, g, one_based=True)
        weights_out = args.weights_out or args.graph_out + ".weights"
        write_weights(weights_out, [g.weights[v] for v in kept])
        shift = 1 if one_based else 0
        report["reduced_graph"] = {
            "edge_file": args.graph_out,
            "weight_file": weights_out,
            "kept_vertices": [v + shift for v in kept],
        }
    if args.cover_out:
        write_solution(args.cover_out, outcome.partial_cover.members, one_based)
    print(render(report, args.output))
    return 0


def cmd_oracle(args) -> int:
    g, load = parse_graph(args.graph, args.format, args.indexing, args.weights)
    result = brute_force_mwvc(g)
    shift = 1 if load.indexing == "1-based" else 0
    report = {
        "instance": load.name,
        "graph": graph_section(load),
        "result": {
            "weight": result.weight,
            "cover": [v + shift for v in sorted(result.one_cover)],
        },
    }
    print(render(report, args.output))
    return 0


def cmd_verify(args) -> int:
    g, load = parse_graph(args.graph, args.format, args.indexing, args.weights)
    one_based = load.indexing == "1-based"
    cover = read_solution(args.cover, one_based, n=g.n)
    valid = is_vertex_cover(g, cover)
    report = {
        "instance": load.name,
        "result": {
            "valid": valid,
            "cover_size": len(cover),
            "cover_weight": cover_weight(g, cover),
        },
    }
    print(render(report, args.output))
    return 0 if valid else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
