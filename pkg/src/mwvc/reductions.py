"""Graph simplification rules and the fixpoint reduction pipeline.

Each rule removes vertices whose cover membership is forced (or free) and
records the forced vertices in a growing partial cover. Applying the rules
to exhaustion shrinks the graph without changing the optimal cover weight:
optimum(original) = partial cover weight + optimum(reduced).

Rules scan live vertices in ascending id order and re-sweep until a full
sweep fires nothing, which makes the reduced graph deterministic. The final
cover weight does not depend on scan order, only the particular cover can.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import WeightedGraph

RULE_NAMES = ("degree0", "adjacent", "degree1", "degree2", "zero_weight")


class PartialCover:
    """Vertices committed to the cover, with their running total weight."""

    __slots__ = ("members", "total_weight", "_weights")

    def __init__(self, weights: list[int], members: Iterable[int] = ()):
        self._weights = weights
        self.members: set[int] = set()
        self.total_weight = 0
        for v in members:
            self.add(v)

    def add(self, v: int) -> None:
        if v in self.members:
            raise ValueError(f"vertex {v} already in cover")
        self.members.add(v)
        self.total_weight += self._weights[v]

    def remove(self, v: int) -> None:
        self.members.remove(v)
        self.total_weight -= self._weights[v]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members


@dataclass
class ReductionOutcome:
    """What the reduction pipeline did: forced cover, per-rule removals, passes."""

    partial_cover: PartialCover
    removed_by_rule: dict[str, int]
    passes: int

    @property
    def total_removed(self) -> int:
        return sum(self.removed_by_rule.values())


def rule_degree0(g: WeightedGraph) -> int:
    """Remove isolated vertices; no edges to cover, so none join the cover."""
    removed = 0
    while True:
        hits = [v for v in g.live_vertices() if g.degree(v) == 0]
        if not hits:
            return removed
        for v in hits:
            g.remove_vertex(v)
        removed += len(hits)


def rule_adjacent(g: WeightedGraph, cover: PartialCover) -> int:
    """Where a vertex outweighs its whole neighborhood, take the neighborhood.

    For live v with d(v) >= 1 and w(v) >= w(N(v)): N(v) joins the cover and
    v and N(v) leave the graph. Isolated vertices are left to rule_degree0.
    """
    removed = 0
    while True:
        fired = False
        for v in list(g.live_vertices()):
            if not g.is_live(v) or g.degree(v) == 0:
                continue
            if g.weights[v] >= g.neighborhood_weight(v):
                nbrs = sorted(g.adj(v))
                g.remove_vertex(v)
                for u in nbrs:
                    cover.add(u)
                    g.remove_vertex(u)
                removed += 1 + len(nbrs)
                fired = True
        if not fired:
            return removed


def rule_degree1(g: WeightedGraph, cover: PartialCover) -> int:
    """Where degree-1 neighbors collectively outweigh v, take v instead.

    For live v whose degree-1 neighbors L are nonempty and w(v) <= w(L):
    v joins the cover; v and L leave the graph. The nonempty requirement
    matters: with L empty the weight test is vacuous for zero-weight v and
    would force v into the cover with no edge to justify it.
    """
    removed = 0
    while True:
        fired = False
        for v in list(g.live_vertices()):
            if not g.is_live(v):
                continue
            leaves = [u for u in g.adj(v) if g.degree(u) == 1]
            if not leaves:
                continue
            if g.weights[v] <= sum(g.weights[u] for u in leaves):
                cover.add(v)
                g.remove_vertex(v)
                for u in sorted(leaves):
                    g.remove_vertex(u)
                removed += 1 + len(leaves)
                fired = True
        if not fired:
            return removed


def rule_degree2(g: WeightedGraph, cover: PartialCover) -> int:
    """Where a pair of vertices is outweighed by their shared degree-2
    neighbors, take the pair.

    Degree-2 vertices are grouped by their (unordered) neighbor pair. For a
    pair (a, b) with shared degree-2 neighbor group A, if w(a) + w(b) <= w(A)
    then a and b join the cover and A and the pair leave the graph. A is the
    maximal group for its pair, recomputed at application time; pairs are
    visited in ascending sorted order and sweeps repeat until quiescent.
    """
    removed = 0
    while True:
        pairs = set()
        for v in g.live_vertices():
            if g.degree(v) == 2:
                a, b = sorted(g.adj(v))
                pairs.add((a, b))
        applied = False
        for a, b in sorted(pairs):
            if not (g.is_live(a) and g.is_live(b)):
                continue
            group = [u for u in g.adj(a) & g.adj(b) if g.degree(u) == 2]
            if not group:
                continue
            if g.weights[a] + g.weights[b] <= sum(g.weights[u] for u in group):
                for u in sorted(group):
                    g.remove_vertex(u)
                cover.add(a)
                g.remove_vertex(a)
                cover.add(b)
                g.remove_vertex(b)
                removed += len(group) + 2
                applied = True
        if not applied:
            return removed


def rule_zero_weight(g: WeightedGraph, cover: PartialCover) -> int:
    """Optional: a zero-weight vertex with any edge covers them for free."""
    removed = 0
    while True:
        fired = False
        for v in list(g.live_vertices()):
            if g.is_live(v) and g.weights[v] == 0 and g.degree(v) > 0:
                cover.add(v)
                g.remove_vertex(v)
                removed += 1
                fired = True
        if not fired:
            return removed


def reduce_graph(g: WeightedGraph, cover: PartialCover | None = None,
                 zero_weight_rule: bool = False) -> ReductionOutcome:
    """Apply all rules to exhaustion, in order of increasing rule complexity.

    The outer loop repeats because one rule can re-enable another (removing
    a degree-2 fan can isolate a vertex, re-enabling the degree-0 rule). It
    terminates because every repeated pass removes at least one vertex.

    Mutates g in place; the caller owns checkpoint/restore if the original
    state is still needed.
    """
    if cover is None:
        cover = PartialCover(g.weights)
    counts = {name: 0 for name in RULE_NAMES}
    passes = 0
    while True:
        passes += 1
        before = g.n_alive
        counts["degree0"] += rule_degree0(g)
        if zero_weight_rule:
            counts["zero_weight"] += rule_zero_weight(g, cover)
        counts["adjacent"] += rule_adjacent(g, cover)
        counts["degree1"] += rule_degree1(g, cover)
        counts["degree2"] += rule_degree2(g, cover)
        if g.n_alive == before:
            break
    return ReductionOutcome(partial_cover=cover, removed_by_rule=counts,
                            passes=passes)


def applicable_rules(g: WeightedGraph, zero_weight_rule: bool = False) -> set[str]:
    """Names of rules that still have at least one applicable target.

    Empty set after reduce_graph(); used to audit the fixpoint postcondition.
    """
    hits: set[str] = set()
    for v in g.live_vertices():
        d = g.degree(v)
        if d == 0:
            hits.add("degree0")
            continue
        if zero_weight_rule and g.weights[v] == 0:
            hits.add("zero_weight")
        if g.weights[v] >= g.neighborhood_weight(v):
            hits.add("adjacent")
        leaves = [u for u in g.adj(v) if g.degree(u) == 1]
        if leaves and g.weights[v] <= sum(g.weights[u] for u in leaves):
            hits.add("degree1")
    pairs = set()
    for v in g.live_vertices():
        if g.degree(v) == 2:
            pairs.add(tuple(sorted(g.adj(v))))
    for a, b in pairs:
        group = [u for u in g.adj(a) & g.adj(b) if g.degree(u) == 2]
        if group and g.weights[a] + g.weights[b] <= sum(g.weights[u] for u in group):
            hits.add("degree2")
    return hits
