"""Branch-and-bound search for a minimum weight vertex cover.

solve() runs the whole pipeline: reduce the graph, split it into connected
components, and search each component independently with the component's
full vertex set as the initial incumbent. search() is the per-graph
branch-and-bound core, usable directly on any graph.

At every node the search either takes the branching vertex v into the cover
or excludes it, which forces all of N(v) in. Those two cases partition all
covers, so with the admissible lower bound the search is exact. Pruning
uses >= so equal-weight alternatives are cut: one optimum is returned, not
all. Graph mutation is rolled back around each branch, and both entry
points leave the graph exactly as they found it.
"""

from __future__ import annotations

import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .bounds import lower_bound
from .branching import HeuristicChoice, select_vertex
from .graph import WeightedGraph, is_vertex_cover
from .reductions import PartialCover, ReductionOutcome, reduce_graph


@dataclass(frozen=True)
class Budget:
    """Optional resource limits, checked at every search node."""

    time_limit: float | None = None
    node_limit: int | None = None


@dataclass
class SearchStats:
    nodes_explored: int = 0
    prunes: int = 0
    max_depth: int = 0


@dataclass
class SearchResult:
    """Best cover found for one graph. completed=False means a limit fired."""

    cover: set[int]
    weight: int
    completed: bool


@dataclass
class SolveStats:
    nodes_explored: int = 0
    prunes: int = 0
    max_depth: int = 0
    wall_time_seconds: float = 0.0
    component_sizes: list[int] = field(default_factory=list)
    n_subgraphs: int = 0
    remaining_after_reduction: int = 0
    reduction: ReductionOutcome | None = None


@dataclass
class SolveResult:
    cover: set[int]
    weight: int
    optimal: bool
    stats: SolveStats


class _Run:
    """Mutable state shared down one search recursion."""

    __slots__ = ("heuristic", "rng", "bound_fn", "stats", "node_limit",
                 "deadline", "expired", "best_cover", "best_weight")

    def __init__(self, heuristic, rng, bound_fn, stats, node_limit, deadline,
                 best_cover, best_weight):
        self.heuristic = heuristic
        self.rng = rng
        self.bound_fn = bound_fn
        self.stats = stats
        self.node_limit = node_limit
        self.deadline = deadline
        self.expired = False
        self.best_cover = best_cover
        self.best_weight = best_weight


def _node(run: _Run, g: WeightedGraph, partial: PartialCover, depth: int) -> None:
    stats = run.stats
    stats.nodes_explored += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    if (run.node_limit is not None and stats.nodes_explored > run.node_limit) or \
       (run.deadline is not None and time.perf_counter() > run.deadline):
        run.expired = True
        return

    if g.m_alive == 0:
        # Every edge is covered; surviving isolated vertices stay out.
        if partial.total_weight < run.best_weight:
            run.best_weight = partial.total_weight
            run.best_cover = set(partial.members)
        return

    if run.bound_fn(g) + partial.total_weight >= run.best_weight:
        stats.prunes += 1
        return

    v = select_vertex(g, run.heuristic, run.rng)
    nbrs = sorted(g.adj(v))

    # Branch 1: v joins the cover.
    cp = g.checkpoint()
    g.remove_vertex(v)
    partial.add(v)
    _node(run, g, partial, depth + 1)
    partial.remove(v)
    g.restore(cp)
    if run.expired:
        return

    # Branch 2: v stays out, so all of N(v) joins.
    cp = g.checkpoint()
    g.remove_vertex(v)
    for u in nbrs:
        g.remove_vertex(u)
        partial.add(u)
    _node(run, g, partial, depth + 1)
    for u in nbrs:
        partial.remove(u)
    g.restore(cp)


def _ensure_recursion_room(depth_needed: int) -> None:
    want = 2 * depth_needed + 512
    if sys.getrecursionlimit() < want:
        sys.setrecursionlimit(want)


def search(g: WeightedGraph, heuristic: HeuristicChoice | None = None,
           budget: Budget | None = None, incumbent: set[int] | None = None,
           partial: PartialCover | None = None, bound_fn=lower_bound,
           stats: SearchStats | None = None, rng: random.Random | None = None,
           deadline: float | None = None) -> SearchResult:
    """Branch-and-bound over the live part of g.

    `incumbent` is the starting best cover (default: all live vertices,
    which is always valid). `partial` carries already-committed context
    weight. Returns a strict improvement if one exists within budget,
    otherwise the incumbent unchanged. The graph is restored to its entry
    state before returning.
    """
    heuristic = heuristic or HeuristicChoice()
    budget = budget or Budget()
    if incumbent is None:
        incumbent = set(g.live_vertices())
    if partial is None:
        partial = PartialCover(g.weights)
    if stats is None:
        stats = SearchStats()
    if rng is None:
        rng = random.Random(heuristic.rng_seed)
    if deadline is None and budget.time_limit is not None:
        deadline = time.perf_counter() + budget.time_limit

    _ensure_recursion_room(g.n_alive)
    run = _Run(heuristic, rng, bound_fn, stats, budget.node_limit, deadline,
               set(incumbent), sum(g.weights[v] for v in incumbent) + partial.total_weight)
    entry = g.checkpoint()
    try:
        _node(run, g, partial, 0)
    finally:
        g.restore(entry)
    return SearchResult(cover=run.best_cover,
                        weight=run.best_weight,
                        completed=not run.expired)


def _solve_component(sub: WeightedGraph, heuristic: HeuristicChoice,
                     rng: random.Random, bound_fn, stats: SearchStats,
                     node_limit: int | None, deadline: float | None) -> SearchResult:
    run = _Run(heuristic, rng, bound_fn, stats, node_limit, deadline,
               set(sub.live_vertices()), sum(sub.weights))
    _node(run, sub, PartialCover(sub.weights), 0)
    return SearchResult(cover=run.best_cover, weight=run.best_weight,
                        completed=not run.expired)


def solve(g: WeightedGraph, heuristic: HeuristicChoice | None = None,
          budget: Budget | None = None, reductions_enabled: bool = True,
          parallel_components: bool = False, zero_weight_rule: bool = False,
          bound_fn=lower_bound) -> SolveResult:
    """Find a minimum weight vertex cover of g.

    Reduces at the root (unless disabled), decomposes into connected
    components, and searches each component with its full vertex set as the
    initial incumbent. With optimal=True the returned weight is the exact
    minimum; on budget expiry the best-known valid cover is returned with
    optimal=False. g is restored to its entry state.
    """
    t0 = time.perf_counter()
    heuristic = heuristic or HeuristicChoice()
    budget = budget or Budget()
    deadline = t0 + budget.time_limit if budget.time_limit is not None else None

    entry = g.checkpoint()
    cover = PartialCover(g.weights)
    reduction = None
    if reductions_enabled:
        reduction = reduce_graph(g, cover, zero_weight_rule=zero_weight_rule)
    remaining = g.n_alive

    subproblems = []
    for comp in g.components():
        sub, ids = g.induced_subgraph(comp)
        if sub.m_alive > 0:
            subproblems.append((sub, ids))
    g.restore(entry)

    stats = SolveStats(component_sizes=[sub.n for sub, _ in subproblems],
                       n_subgraphs=len(subproblems),
                       remaining_after_reduction=remaining,
                       reduction=reduction)
    if subproblems:
        _ensure_recursion_room(max(sub.n for sub, _ in subproblems))

    total_cover = set(cover.members)
    total_weight = cover.total_weight
    expired = False

    if parallel_components and len(subproblems) > 1:
        # Disjoint subgraphs share no mutable state, so they can run
        # concurrently. Each gets its own stats, rng stream, and node
        # budget; results merge in deterministic component order.
        per_stats = [SearchStats() for _ in subproblems]
        with ThreadPoolExecutor() as pool:
            futures = [
                pool.submit(_solve_component, sub, heuristic,
                            random.Random((heuristic.rng_seed, i)), bound_fn,
                            per_stats[i], budget.node_limit, deadline)
                for i, (sub, _) in enumerate(subproblems)
            ]
            results = [f.result() for f in futures]
        for st in per_stats:
            stats.nodes_explored += st.nodes_explored
            stats.prunes += st.prunes
            stats.max_depth = max(stats.max_depth, st.max_depth)
        for (sub, ids), res in zip(subproblems, results):
            expired |= not res.completed
            for local in res.cover:
                total_cover.add(ids[local])
                total_weight += sub.weights[local]
    else:
        search_stats = SearchStats()
        rng = random.Random(heuristic.rng_seed)
        for sub, ids in subproblems:
            if expired:
                chosen: set[int] = set(sub.live_vertices())
            else:
                res = _solve_component(sub, heuristic, rng, bound_fn,
                                       search_stats, budget.node_limit,
                                       deadline)
                expired |= not res.completed
                chosen = res.cover
            for local in chosen:
                total_cover.add(ids[local])
                total_weight += sub.weights[local]
        stats.nodes_explored = search_stats.nodes_explored
        stats.prunes = search_stats.prunes
        stats.max_depth = search_stats.max_depth

    if not is_vertex_cover(g, total_cover):
        raise AssertionError("internal error: produced set is not a vertex cover")
    stats.wall_time_seconds = time.perf_counter() - t0
    return SolveResult(cover=total_cover, weight=total_weight,
                       optimal=not expired, stats=stats)
