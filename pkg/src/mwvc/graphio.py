"""Graph file ingestion, weight schemes, and result/solution file output.

Supported formats:

  edge-list      one "u v" pair per line; %, # and c-prefixed lines are
                 comments; extra columns are ignored. Indexing is detected
                 (a vertex 0 means 0-based) unless given explicitly.
  matrix-market  coordinate files (pattern or valued); always 1-based.
  dimacs         "p edge N M" header, "e u v" edges, optional "n v w"
                 vertex-weight lines; always 1-based.

Vertex weights come from exactly one source: a scheme, a sidecar file with
one integer per line, or weights embedded in a DIMACS file. Benchmark edge
files usually carry no vertex weights, so schemes impose them; the common
convention weights vertex i (1-based) as (i+1) mod 200, which makes weight
zero legal.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from .graph import GraphError, WeightedGraph, build_graph

NAMED_SCHEMES = ("unit", "i-mod-200", "i-mod-200-zero-based")


class ParseError(GraphError):
    """Malformed graph or weight file; carries the offending line number."""

    def __init__(self, message: str, path: str | None = None,
                 line: int | None = None):
        where = ""
        if path is not None:
            where = f"{path}:" if line is None else f"{path}:{line}: "
        super().__init__(f"{where}{message}")
        self.path = path
        self.line = line


# -- weight schemes --------------------------------------------------------

def is_weight_scheme(spec: str) -> bool:
    return spec in NAMED_SCHEMES or spec.startswith(("const:", "random:"))


def scheme_weights(n: int, scheme: str, rng: random.Random | None = None) -> list[int]:
    """Weights for vertices 0..n-1 under a named scheme.

    i-mod-200 weights the vertex with 1-based index i as (i+1) mod 200; the
    zero-based variant applies the same formula to 0-based indexes. random
    schemes ("random:LO:HI") need a seeded generator.
    """
    if scheme == "unit":
        return [1] * n
    if scheme == "i-mod-200":
        return [(i + 1) % 200 for i in range(1, n + 1)]
    if scheme == "i-mod-200-zero-based":
        return [(i + 1) % 200 for i in range(n)]
    if scheme.startswith("const:"):
        try:
            k = int(scheme[len("const:"):])
        except ValueError:
            raise GraphError(f"bad constant weight scheme {scheme!r}") from None
        if k < 0:
            raise GraphError(f"weights must be non-negative, got const:{k}")
        return [k] * n
    if scheme.startswith("random:"):
        parts = scheme.split(":")
        try:
            lo, hi = int(parts[1]), int(parts[2])
        except (IndexError, ValueError):
            raise GraphError(f"bad random weight scheme {scheme!r}, "
                             "expected random:LO:HI") from None
        if lo < 0 or hi < lo:
            raise GraphError(f"bad random weight range {lo}..{hi}")
        if rng is None:
            raise GraphError("random weight scheme needs a seeded generator")
        return [rng.randint(lo, hi) for _ in range(n)]
    raise GraphError(f"unknown weight scheme {scheme!r}")


# -- parsing ----------------------------------------------------------------

@dataclass(frozen=True)
class LoadReport:
    """Provenance of a loaded graph, echoed into run reports."""

    name: str
    format: str
    indexing: str
    n_vertices: int
    n_edges: int
    duplicate_edges: int
    self_loops: int
    weight_source: str


def _is_comment(stripped: str) -> bool:
    return (not stripped or stripped.startswith(("%", "#"))
            or stripped.split(maxsplit=1)[0] == "c")


def detect_format(path: str, first_data_line: str | None) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext == ".mtx":
        return "matrix-market"
    if ext in (".dimacs", ".col", ".clq"):
        return "dimacs"
    if first_data_line is not None:
        if first_data_line.startswith("%%MatrixMarket"):
            return "matrix-market"
        if first_data_line.split(maxsplit=1)[0] in ("p", "e", "n"):
            return "dimacs"
    return "edge-list"


def _read_int_pair(tokens: list[str], path: str, lineno: int) -> tuple[int, int]:
    if len(tokens) < 2:
        raise ParseError(f"expected two vertex ids, got {' '.join(tokens)!r}",
                         path, lineno)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"non-integer vertex id in {' '.join(tokens)!r}",
                         path, lineno) from None


def _parse_edge_list(lines, path):
    edges = []
    for lineno, raw in lines:
        tokens = raw.split()
        edges.append((_read_int_pair(tokens, path, lineno), lineno))
    return None, edges, None


def _parse_matrix_market(lines, path):
    it = iter(lines)
    try:
        lineno, dims_line = next(it)
    except StopIteration:
        raise ParseError("missing matrix dimensions line", path) from None
    tokens = dims_line.split()
    if len(tokens) < 3:
        raise ParseError(f"bad dimensions line {dims_line!r}", path, lineno)
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"bad dimensions line {dims_line!r}", path, lineno) from None
    if rows != cols:
        raise ParseError(f"adjacency matrix must be square, got {rows}x{cols}",
                         path, lineno)
    edges = []
    for lineno, raw in it:
        edges.append((_read_int_pair(raw.split(), path, lineno), lineno))
    return rows, edges, None


def _parse_dimacs(lines, path):
    declared = None
    edges = []
    node_weights: dict[int, int] = {}
    for lineno, raw in lines:
        tokens = raw.split()
        kind = tokens[0]
        if kind == "p":
            if len(tokens) < 3:
                raise ParseError(f"bad problem line {raw!r}", path, lineno)
            try:
                declared = int(tokens[2])
            except ValueError:
                raise ParseError(f"bad problem line {raw!r}", path, lineno) from None
        elif kind == "e":
            edges.append((_read_int_pair(tokens[1:], path, lineno), lineno))
        elif kind == "n":
            v, w = _read_int_pair(tokens[1:], path, lineno)
            if w < 0:
                raise ParseError(f"vertex {v} has negative weight {w}",
                                 path, lineno)
            node_weights[v] = w
        else:
            raise ParseError(f"unknown line type {kind!r}", path, lineno)
    return declared, edges, node_weights or None


def read_weights_file(path: str) -> list[int]:
    """Sidecar weight file: one non-negative integer per line."""
    weights = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            stripped = raw.strip()
            if not stripped or stripped.startswith(("%", "#")):
                continue
            try:
                w = int(stripped)
            except ValueError:
                raise ParseError(f"non-integer weight {stripped!r}",
                                 path, lineno) from None
            if w < 0:
                raise ParseError(f"negative weight {w}", path, lineno)
            weights.append(w)
    return weights


def parse_graph(path: str, fmt: str = "auto", indexing: str = "auto",
                weights: str | None = None) -> tuple[WeightedGraph, LoadReport]:
    """Load a graph file, normalize it, and attach vertex weights.

    `weights` may be a scheme name (see scheme_weights) or the path of a
    sidecar file; None falls back to DIMACS in-file weights when present
    (unspecified vertices default to 1), otherwise every weight is 1.
    Duplicate edges and self-loops are dropped and counted, not errors.
    """
    with open(path) as fh:
        raw_lines = fh.readlines()
    data_lines = [(i, line.strip()) for i, line in enumerate(raw_lines, 1)
                  if not _is_comment(line.strip())]

    first = data_lines[0][1] if data_lines else None
    if fmt == "auto":
        fmt = detect_format(path, first)
    if fmt == "matrix-market" and data_lines and \
            data_lines[0][1].startswith("%%MatrixMarket"):
        data_lines = data_lines[1:]

    if fmt == "edge-list":
        declared, raw_edges, file_weights = _parse_edge_list(data_lines, path)
    elif fmt == "matrix-market":
        declared, raw_edges, file_weights = _parse_matrix_market(data_lines, path)
    elif fmt == "dimacs":
        declared, raw_edges, file_weights = _parse_dimacs(data_lines, path)
    else:
        raise GraphError(f"unknown format {fmt!r}")

    if fmt in ("matrix-market", "dimacs"):
        indexing = "1-based"
    elif indexing == "auto":
        has_zero = any(u == 0 or v == 0 for (u, v), _ in raw_edges)
        indexing = "0-based" if has_zero else "1-based"
    elif indexing not in ("0-based", "1-based"):
        raise GraphError(f"unknown indexing {indexing!r}")
    shift = 1 if indexing == "1-based" else 0

    edges = []
    max_id = -1
    for (u, v), lineno in raw_edges:
        u -= shift
        v -= shift
        if u < 0 or v < 0:
            raise ParseError(f"vertex id below {shift} in {indexing} file",
                             path, lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise ParseError(
                f"edge ({u + shift}, {v + shift}) exceeds the declared "
                f"{declared} vertices", path, lineno)
        max_id = max(max_id, u, v)
        edges.append((u, v))
    n = declared if declared is not None else max_id + 1

    if weights is not None and is_weight_scheme(weights):
        if weights.startswith("random:"):
            raise GraphError("random weight schemes are for generated "
                             "instances; load weights from a file instead")
        weight_values = scheme_weights(n, weights)
        weight_source = f"scheme({weights})"
    elif weights is not None:
        weight_values = read_weights_file(weights)
        if len(weight_values) < n:
            raise GraphError(
                f"{weights}: {len(weight_values)} weights for {n} vertices")
        n = max(n, len(weight_values))
        weight_source = f"file({os.path.basename(weights)})"
    elif file_weights is not None:
        weight_values = [1] * n
        for v, w in file_weights.items():
            idx = v - shift
            if not 0 <= idx < n:
                raise GraphError(f"{path}: weight for unknown vertex {v}")
            weight_values[idx] = w
        weight_source = "in-file"
    else:
        weight_values = [1] * n
        weight_source = "scheme(unit)"

    g = build_graph(n, edges, weight_values)
    report = LoadReport(
        name=os.path.splitext(os.path.basename(path))[0],
        format=fmt,
        indexing=indexing,
        n_vertices=n,
        n_edges=g.m_alive,
        duplicate_edges=g.load_stats.duplicate_edges,
        self_loops=g.load_stats.self_loops,
        weight_source=weight_source,
    )
    return g, report


# -- output -----------------------------------------------------------------

def write_edge_list(path: str, g: WeightedGraph, one_based: bool = True) -> list[int]:
    """Write the live subgraph as an edge list with dense remapped ids.

    Returns the kept original ids in ascending order; the vertex written as
    id i (0-based) is kept[i].
    """
    kept = list(g.live_vertices())
    index = {v: i for i, v in enumerate(kept)}
    shift = 1 if one_based else 0
    with open(path, "w") as fh:
        fh.write(f"% {len(kept)} vertices, {g.m_alive} edges\n")
        for u, v in g.edge_list():
            fh.write(f"{index[u] + shift} {index[v] + shift}\n")
    return kept


def write_weights(path: str, weights: list[int]) -> None:
    with open(path, "w") as fh:
        for w in weights:
            fh.write(f"{w}\n")


def write_solution(path: str, cover: set[int], one_based: bool = True) -> None:
    """Solution file: one vertex id per line, in the input file's indexing."""
    shift = 1 if one_based else 0
    with open(path, "w") as fh:
        for v in sorted(cover):
            fh.write(f"{v + shift}\n")


def read_solution(path: str, one_based: bool = True, n: int | None = None) -> set[int]:
    shift = 1 if one_based else 0
    cover = set()
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            stripped = raw.strip()
            if not stripped or stripped.startswith(("%", "#")):
                continue
            try:
                v = int(stripped) - shift
            except ValueError:
                raise ParseError(f"non-integer vertex id {stripped!r}",
                                 path, lineno) from None
            if v < 0 or (n is not None and v >= n):
                raise ParseError(f"vertex id {stripped} out of range",
                                 path, lineno)
            cover.add(v)
    return cover
