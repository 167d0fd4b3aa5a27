"""Machine-readable run reports.

Reports are plain nested dicts with stable keys so that identical runs
render byte-identical JSON; runtime_seconds is the only field expected to
vary between repeat runs.
"""

from __future__ import annotations

import json

from .graphio import LoadReport
from .search import SolveResult


def density(n: int, m: int) -> float:
    if n < 2:
        return 0.0
    return 2.0 * m / (n * (n - 1))


def graph_section(load: LoadReport) -> dict:
    return {
        "n_vertices": load.n_vertices,
        "n_edges": load.n_edges,
        "density": density(load.n_vertices, load.n_edges),
    }


def load_section(load: LoadReport) -> dict:
    return {
        "format": load.format,
        "indexing": load.indexing,
        "duplicate_edges": load.duplicate_edges,
        "self_loops": load.self_loops,
        "weight_source": load.weight_source,
    }


def reduction_section(enabled: bool, remaining: int, n_subgraphs: int,
                      outcome) -> dict:
    section = {
        "enabled": enabled,
        "remaining_vertices": remaining,
        "n_subgraphs": n_subgraphs,
    }
    if outcome is not None:
        section["removed_by_rule"] = dict(outcome.removed_by_rule)
        section["passes"] = outcome.passes
        section["partial_cover_weight"] = outcome.partial_cover.total_weight
        section["partial_cover_size"] = len(outcome.partial_cover)
    return section


def solve_report(load: LoadReport, result: SolveResult, config: dict,
                 one_based: bool) -> dict:
    shift = 1 if one_based else 0
    stats = result.stats
    return {
        "instance": load.name,
        "graph": graph_section(load),
        "load": load_section(load),
        "config": config,
        "reduction": reduction_section(
            stats.reduction is not None, stats.remaining_after_reduction,
            stats.n_subgraphs, stats.reduction),
        "result": {
            "weight": result.weight,
            "optimal": result.optimal,
            "cover": [v + shift for v in sorted(result.cover)],
            "cover_size": len(result.cover),
            "nodes_explored": stats.nodes_explored,
            "prunes": stats.prunes,
            "max_depth": stats.max_depth,
            "component_sizes": stats.component_sizes,
            "runtime_seconds": round(stats.wall_time_seconds, 3),
        },
    }


def render(report: dict, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    lines: list[str] = []

    def walk(prefix: str, value) -> None:
        if isinstance(value, dict):
            for key in sorted(value):
                walk(f"{prefix}{key}." if prefix else f"{key}.", value[key])
        else:
            lines.append(f"{prefix[:-1]}: {value}")

    walk("", report)
    return "\n".join(lines)
