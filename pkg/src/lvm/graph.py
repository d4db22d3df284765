"""Undirected social graphs in CSR form.

Covers edge-list parsing, graph construction with dense id remapping,
uniform induced-subgraph sampling, degree/clustering statistics and
eigenvector centrality. Directed inputs are symmetrized: every arc becomes
an undirected edge, then duplicates and self-loops are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from . import kernels


class EdgeListParseError(ValueError):
    """Malformed edge-list line; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(lines: Iterable[str]) -> Iterator[tuple[int, int]]:
    """Yield (raw_id, raw_id) pairs from a text edge list.

    Lines starting with '#' and blank lines are skipped. Data lines must be
    exactly two whitespace-separated integers.
    """
    for lineno, line in enumerate(lines, start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 2 tokens, got {len(parts)}: {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer token in {s!r}") from None
        yield u, v


@dataclass(eq=False)
class Graph:
    """Simple undirected graph: dense ids in [0, n), sorted CSR adjacency."""

    n: int
    edge_count: int
    indptr: np.ndarray  # int64, shape (n+1,)
    indices: np.ndarray  # int32, shape (2*edge_count,)

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = int(np.searchsorted(row, v))
        return i < row.size and row[i] == v

    def undirected_pairs(self) -> tuple[np.ndarray, np.ndarray]:
        """All edges as (u, v) arrays with u < v."""
        src = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees)
        dst = self.indices.astype(np.int64)
        keep = src < dst
        return src[keep], dst[keep]


def _csr_from_pairs(a: np.ndarray, b: np.ndarray, n: int) -> Graph:
    # a, b: undirected edges with a < b, already deduplicated
    src = np.concatenate([a, b])
    dst = np.concatenate([b, a])
    order = np.lexsort((dst, src))
    src, dst = src[order], dst[order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.add.at(indptr, src + 1, 1)
    np.cumsum(indptr, out=indptr)
    return Graph(n=n, edge_count=int(a.size), indptr=indptr, indices=dst.astype(np.int32))


def build_graph(pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from raw id pairs.

    Raw ids are remapped to dense ids in ascending raw-id order; reversed
    duplicates merge and self-loops drop. Empty input gives the empty graph.
    """
    if isinstance(pairs, np.ndarray):
        arr = pairs.astype(np.int64, copy=False).reshape(-1, 2)
    else:
        arr = np.array(list(pairs), dtype=np.int64).reshape(-1, 2)
    if arr.size == 0:
        return Graph(n=0, edge_count=0,
                     indptr=np.zeros(1, dtype=np.int64),
                     indices=np.zeros(0, dtype=np.int32))
    raw_ids = np.unique(arr)
    n = int(raw_ids.size)
    u = np.searchsorted(raw_ids, arr[:, 0])
    v = np.searchsorted(raw_ids, arr[:, 1])
    keep = u != v
    u, v = u[keep], v[keep]
    a, b = np.minimum(u, v), np.maximum(u, v)
    keys = np.unique(a * np.int64(n) + b)
    return _csr_from_pairs(keys // n, keys % n, n)


def sample_induced(g: Graph, target_n: int, rng: np.random.Generator) -> Graph:
    """Uniform random induced subgraph of target_n nodes, ids re-densified."""
    if not 0 < target_n <= g.n:
        raise ValueError(f"target_n must be in (0, {g.n}], got {target_n}")
    chosen = np.sort(rng.choice(g.n, size=target_n, replace=False))
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[chosen] = np.arange(target_n, dtype=np.int64)
    a, b = g.undirected_pairs()
    keep = (remap[a] >= 0) & (remap[b] >= 0)
    return _csr_from_pairs(remap[a[keep]], remap[b[keep]], target_n)


@dataclass
class CentralityVector:
    """L2-normalized nonnegative eigenvector-centrality scores."""

    scores: np.ndarray
    residual: float
    iterations: int
    degenerate: bool = False


def eigenvector_centrality(g: Graph, tol: float = 1e-8, max_iter: int = 1000) -> CentralityVector:
    """Dominant adjacency eigenvector by power iteration from a uniform start.

    Iterates A+I (bipartite components would make iteration on A alone
    oscillate; the shift keeps the dominant eigenvector unchanged), with L2
    normalization each step; stops when the L2 change drops below tol.
    Edgeless graphs are degenerate: the uniform vector is returned flagged.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    if g.edge_count == 0:
        return CentralityVector(scores=x, residual=0.0, iterations=0, degenerate=True)
    residual = np.inf
    it = 0
    for it in range(1, max_iter + 1):
        y = kernels.adj_matvec(g.indptr, g.indices, x) + x
        y /= np.linalg.norm(y)
        residual = float(np.linalg.norm(y - x))
        x = y
        if residual < tol:
            break
    return CentralityVector(scores=x, residual=residual, iterations=it)


@dataclass
class GraphStats:
    n: int
    edge_count: int
    avg_degree: float
    avg_clustering: float


def graph_stats(g: Graph) -> GraphStats:
    """Average degree 2m/n and mean local clustering (0 for degree < 2)."""
    if g.n < 1:
        raise ValueError("graph must have at least one node")
    tri = kernels.triangle_counts(g.indptr, g.indices)
    deg = g.degrees
    local = np.zeros(g.n, dtype=np.float64)
    mask = deg >= 2
    d = deg[mask].astype(np.float64)
    local[mask] = 2.0 * tri[mask] / (d * (d - 1.0))
    return GraphStats(
        n=g.n,
        edge_count=g.edge_count,
        avg_degree=2.0 * g.edge_count / g.n,
        avg_clustering=float(local.mean()),
    )
