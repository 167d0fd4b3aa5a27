"""Independent brute-force reference solver and seeded instance generator.

The brute force enumerates every vertex subset, so it is exponentially slow
but obviously correct; it exists as ground truth for the real solver and is
hard-capped at 20 live vertices. The generator produces reproducible random
instances: identical parameters and seed give an identical graph on any
platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graph import WeightedGraph, build_graph, is_vertex_cover
from .graphio import scheme_weights

MAX_ORACLE_VERTICES = 20


@dataclass(frozen=True)
class OracleResult:
    weight: int
    one_cover: frozenset[int]


def brute_force_mwvc(g: WeightedGraph) -> OracleResult:
    """Exhaustive minimum weight vertex cover over the live part of g.

    Scans all 2^k subsets of the k live vertices (k <= 20 enforced). The
    witness is the lexicographically smallest minimum-weight cover, so
    expected values frozen from this oracle are unique and stable.
    """
    live = list(g.live_vertices())
    k = len(live)
    if k > MAX_ORACLE_VERTICES:
        raise ValueError(
            f"brute force capped at {MAX_ORACLE_VERTICES} live vertices, got {k}")
    index = {v: i for i, v in enumerate(live)}

    masks = np.arange(1 << k, dtype=np.int64)
    covered = np.ones(1 << k, dtype=bool)
    for u, v in g.edges():
        covered &= (((masks >> index[u]) | (masks >> index[v])) & 1).astype(bool)
    weight_of = np.zeros(1 << k, dtype=np.int64)
    for i, v in enumerate(live):
        weight_of += np.int64(g.weights[v]) * ((masks >> i) & 1)

    feasible = np.flatnonzero(covered)
    best = int(weight_of[feasible].min())
    ties = feasible[weight_of[feasible] == best]
    witness = min(
        tuple(live[i] for i in range(k) if (int(m) >> i) & 1) for m in ties)

    cover = frozenset(witness)
    assert is_vertex_cover(g, cover)
    assert sum(g.weights[v] for v in cover) == best
    return OracleResult(weight=best, one_cover=cover)


def _pair_from_index(t: int, n: int) -> tuple[int, int]:
    # Pairs ordered (0,1),(0,2),...,(0,n-1),(1,2),...
    u = 0
    row = n - 1
    while t >= row:
        t -= row
        u += 1
        row -= 1
    return (u, u + 1 + t)


def random_graph(n: int, edge_probability: float | None = None,
                 target_edges: int | None = None,
                 weight_scheme: str = "unit", seed: int = 0) -> WeightedGraph:
    """Reproducible random graph on n vertices.

    Exactly one of edge_probability / target_edges selects the edge model
    (neither means no edges). Weights come from `weight_scheme` (see
    graphio.scheme_weights); random schemes draw from the same seeded
    generator, after the edges.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if edge_probability is not None and target_edges is not None:
        raise ValueError("give edge_probability or target_edges, not both")
    rng = random.Random(seed)

    edges: list[tuple[int, int]] = []
    if edge_probability is not None:
        if not 0.0 <= edge_probability <= 1.0:
            raise ValueError(f"edge probability {edge_probability} outside [0, 1]")
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < edge_probability:
                    edges.append((u, v))
    elif target_edges is not None:
        n_pairs = n * (n - 1) // 2
        if target_edges > n_pairs:
            raise ValueError(f"target_edges {target_edges} exceeds the "
                             f"{n_pairs} available pairs")
        picked = sorted(rng.sample(range(n_pairs), target_edges))
        edges = [_pair_from_index(t, n) for t in picked]

    weights = scheme_weights(n, weight_scheme, rng=rng)
    return build_graph(n, edges, weights)
