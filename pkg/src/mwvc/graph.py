"""Mutable vertex-weighted undirected graph with removal trail and rollback.

Vertex ids are dense integers in [0, n) and stay stable for the lifetime of
a graph: removing a vertex never renumbers the survivors. All mutation goes
through remove_vertex/restore so that any state reached during a search can
be rolled back exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or graph file input."""


@dataclass(frozen=True)
class LoadStats:
    """Degenerate input dropped during construction."""

    duplicate_edges: int = 0
    self_loops: int = 0


@dataclass(frozen=True)
class Checkpoint:
    """Position on the removal trail; restore() rolls back to it."""

    trail_position: int


class WeightedGraph:
    """Undirected graph with non-negative integer vertex weights.

    Adjacency sets contain live vertices only. Removals are logged on a
    trail; restore(checkpoint) brings back exactly the vertices and edges
    that were live when the checkpoint was taken (LIFO discipline: a
    checkpoint is invalidated by restoring past it).
    """

    __slots__ = ("n", "weights", "load_stats", "_adj", "_alive", "_n_alive",
                 "_m_alive", "_trail")

    def __init__(self, n: int, weights: list[int]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(weights) != n:
            raise GraphError(f"expected {n} weights, got {len(weights)}")
        for v, w in enumerate(weights):
            if w < 0:
                raise GraphError(f"vertex {v} has negative weight {w}")
        self.n = n
        self.weights = list(weights)
        self.load_stats = LoadStats()
        self._adj: list[set[int]] = [set() for _ in range(n)]
        self._alive = [True] * n
        self._n_alive = n
        self._m_alive = 0
        self._trail: list[tuple[int, tuple[int, ...]]] = []

    # -- queries ---------------------------------------------------------

    @property
    def n_alive(self) -> int:
        return self._n_alive

    @property
    def m_alive(self) -> int:
        return self._m_alive

    def is_live(self, v: int) -> bool:
        return 0 <= v < self.n and self._alive[v]

    def _require_live(self, v: int) -> None:
        if not self.is_live(v):
            raise ValueError(f"vertex {v} is not live")

    def degree(self, v: int) -> int:
        self._require_live(v)
        return len(self._adj[v])

    def adj(self, v: int) -> set[int]:
        """Live neighbors of v. Treat as read-only."""
        self._require_live(v)
        return self._adj[v]

    def neighborhood_weight(self, v: int) -> int:
        """Total weight of the live neighbors of v."""
        self._require_live(v)
        w = self.weights
        return sum(w[u] for u in self._adj[v])

    def live_vertices(self) -> Iterator[int]:
        """Live vertex ids in ascending order."""
        alive = self._alive
        return (v for v in range(self.n) if alive[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Live edges as (u, v) with u < v."""
        for u in self.live_vertices():
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges())

    # -- mutation and rollback -------------------------------------------

    def _link(self, u: int, v: int) -> None:
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._m_alive += 1

    def remove_vertex(self, v: int) -> None:
        """Remove v and every edge incident to it, logging on the trail."""
        self._require_live(v)
        nbrs = tuple(self._adj[v])
        for u in nbrs:
            self._adj[u].remove(v)
        self._alive[v] = False
        self._n_alive -= 1
        self._m_alive -= len(nbrs)
        self._trail.append((v, nbrs))

    def checkpoint(self) -> Checkpoint:
        return Checkpoint(len(self._trail))

    def restore(self, checkpoint: Checkpoint) -> None:
        """Roll back to the state at checkpoint time."""
        pos = checkpoint.trail_position
        if pos > len(self._trail) or pos < 0:
            raise ValueError(
                f"checkpoint at trail position {pos} was invalidated by an "
                f"earlier restore (trail length {len(self._trail)})")
        trail = self._trail
        while len(trail) > pos:
            v, nbrs = trail.pop()
            self._alive[v] = True
            self._n_alive += 1
            self._m_alive += len(nbrs)
            self._adj[v] = set(nbrs)
            for u in nbrs:
                self._adj[u].add(v)

    # -- structure --------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components of the live graph.

        Each component is a sorted vertex list; components are ordered by
        their smallest member, so the decomposition is deterministic.
        """
        seen = [False] * self.n
        comps = []
        for s in self.live_vertices():
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comp.sort()
            comps.append(comp)
        return comps

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["WeightedGraph", list[int]]:
        """Extract the live subgraph induced by `vertices`.

        Returns a fresh graph with dense local ids plus the list mapping
        local id -> original id (ascending original order).
        """
        ids = sorted(vertices)
        for v in ids:
            self._require_live(v)
        index = {v: i for i, v in enumerate(ids)}
        sub = WeightedGraph(len(ids), [self.weights[v] for v in ids])
        for v in ids:
            for u in self._adj[v]:
                if v < u and u in index:
                    sub._link(index[v], index[u])
        return sub, ids

    def check_invariants(self) -> None:
        """Audit walk: symmetry, liveness, no self-loops, counter agreement."""
        n_alive = 0
        m2 = 0
        for v in range(self.n):
            if not self._alive[v]:
                continue
            n_alive += 1
            for u in self._adj[v]:
                assert u != v, f"self-loop at {v}"
                assert self.is_live(u), f"dead neighbor {u} of live {v}"
                assert v in self._adj[u], f"asymmetric edge ({v},{u})"
                m2 += 1
        assert n_alive == self._n_alive, "n_alive counter out of sync"
        assert m2 == 2 * self._m_alive, "m_alive counter out of sync"


def build_graph(n: int, edges: Iterable[tuple[int, int]],
                weights: list[int]) -> WeightedGraph:
    """Build a simple graph, dropping (and counting) duplicates and self-loops.

    Raises GraphError for endpoints outside [0, n) or negative weights.
    """
    g = WeightedGraph(n, weights)
    seen: set[tuple[int, int]] = set()
    duplicates = 0
    self_loops = 0
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(
                f"edge #{idx} ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            self_loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
            continue
        seen.add(key)
        g._link(*key)
    g.load_stats = LoadStats(duplicate_edges=duplicates, self_loops=self_loops)
    return g


def is_vertex_cover(g: WeightedGraph, cover: Iterable[int]) -> bool:
    """True iff every live edge of g has at least one endpoint in `cover`.

    Pass the original, unreduced graph to check a final solution.
    """
    s = cover if isinstance(cover, (set, frozenset)) else set(cover)
    return all(u in s or v in s for u, v in g.edges())


def cover_weight(g: WeightedGraph, cover: Iterable[int]) -> int:
    return sum(g.weights[v] for v in set(cover))
