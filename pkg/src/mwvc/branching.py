"""Branching-vertex selection for the branch-and-bound search.

Four strategies:

  h1  greatest degree (default)
  h2  uniformly random among vertices with an edge
  h3  smallest weight
  h4  greatest degree-to-weight ratio, compared exactly

h1/h3/h4 break ties by the fewest edges inside the candidate's neighborhood
(a sparser neighborhood means the exclude-branch wipes out more structure),
then by ascending id so runs are reproducible. h2 uses no tie-break.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .graph import WeightedGraph

HEURISTIC_KINDS = ("h1", "h2", "h3", "h4")


@dataclass(frozen=True)
class HeuristicChoice:
    """Branching strategy, fixed for a whole solve. rng_seed feeds h2 only."""

    kind: str = "h1"
    rng_seed: int = 0

    def __post_init__(self):
        if self.kind not in HEURISTIC_KINDS:
            raise ValueError(f"unknown heuristic {self.kind!r}, "
                             f"expected one of {HEURISTIC_KINDS}")


def neighborhood_internal_edges(g: WeightedGraph, v: int) -> int:
    """Number of edges with both endpoints inside N(v)."""
    nbrs = sorted(g.adj(v))
    count = 0
    for i, a in enumerate(nbrs):
        adj_a = g.adj(a)
        for b in nbrs[i + 1:]:
            if b in adj_a:
                count += 1
    return count


def _h4_key(g: WeightedGraph, v: int):
    # Maximize d/w without floats: minimize w/d as an exact rational.
    # Zero-weight vertices are free to take, so they sort first, highest
    # degree leading.
    w = g.weights[v]
    d = g.degree(v)
    if w == 0:
        return (0, -d)
    return (1, Fraction(w, d))


def select_vertex(g: WeightedGraph, h: HeuristicChoice,
                  rng: random.Random | None = None) -> int:
    """Pick the branching vertex among live vertices with at least one edge.

    Raises ValueError if the live graph has no edges (the search must stop
    before selection). h1/h3/h4 are pure functions of the graph; h2 draws
    from `rng` (falling back to a fresh generator seeded with h.rng_seed).
    """
    cands = [v for v in g.live_vertices() if g.degree(v) > 0]
    if not cands:
        raise ValueError("no vertex with an edge to branch on")

    if h.kind == "h2":
        if rng is None:
            rng = random.Random(h.rng_seed)
        return cands[rng.randrange(len(cands))]

    if h.kind == "h1":
        key = lambda v: -g.degree(v)
    elif h.kind == "h3":
        key = lambda v: g.weights[v]
    else:
        key = lambda v: _h4_key(g, v)

    best = min(key(v) for v in cands)
    tied = [v for v in cands if key(v) == best]
    if len(tied) == 1:
        return tied[0]
    return min(tied, key=lambda v: (neighborhood_internal_edges(g, v), v))
