"""Clique-partition lower bound on the remaining cover weight.

Covering all edges of a k-vertex clique takes at least k-1 of its vertices,
so any cover pays at least the clique's weight minus its heaviest vertex.
Summed over vertex-disjoint cliques this bounds the optimum from below, for
any partition. The partition here is greedy: it trades tightness for speed
and only needs to be valid and deterministic.
"""

from __future__ import annotations

from .graph import WeightedGraph


def clique_partition(g: WeightedGraph) -> list[list[int]]:
    """Partition the live vertices into disjoint cliques, greedily.

    Seeds are visited in descending degree (ties: ascending id); each seed
    grows by repeatedly adding the unassigned common neighbor of all current
    members with the highest weight (ties: ascending id). Singletons are
    valid cliques.
    """
    w = g.weights
    order = sorted(g.live_vertices(), key=lambda v: (-g.degree(v), v))
    assigned = [False] * g.n
    cliques: list[list[int]] = []
    for seed in order:
        if assigned[seed]:
            continue
        assigned[seed] = True
        clique = [seed]
        cands = {u for u in g.adj(seed) if not assigned[u]}
        while cands:
            best = max(cands, key=lambda u: (w[u], -u))
            assigned[best] = True
            clique.append(best)
            cands = cands & g.adj(best)
        cliques.append(clique)
    return cliques


def partition_is_valid(g: WeightedGraph, cliques: list[list[int]]) -> bool:
    """Structural audit: disjoint, complete, and covering all live vertices."""
    seen: set[int] = set()
    for clique in cliques:
        for v in clique:
            if v in seen or not g.is_live(v):
                return False
            seen.add(v)
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                if v not in g.adj(u):
                    return False
    return seen == set(g.live_vertices())


def lower_bound(g: WeightedGraph) -> int:
    """Minimum weight any cover of the current live graph must still pay.

    Sum over the greedy clique partition of (clique weight - heaviest
    member). Zero for empty or edgeless graphs; always <= the true optimum.
    """
    w = g.weights
    total = 0
    for clique in clique_partition(g):
        if len(clique) < 2:
            continue
        cw = 0
        cmax = 0
        for v in clique:
            wv = w[v]
            cw += wv
            if wv > cmax:
                cmax = wv
        total += cw - cmax
    return total
