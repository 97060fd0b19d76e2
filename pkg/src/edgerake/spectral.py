"""Dense Laplacian linear algebra for desk-scale graphs.

Everything here materialises n x n (or m x m) dense matrices, so it is meant
for graphs up to a few thousand nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import (Graph, GraphError, connected_components, incidence_bundle,
                    laplacian, normalized_laplacian, require_undirected,
                    require_unweighted)

ZERO_EIG_RTOL = 1e-10
MATRIX_TREE_MAX_NODES = 12


@dataclass(frozen=True)
class PinvResult:
    pinv: np.ndarray
    rank: int
    eigen_tolerance: float


@dataclass(frozen=True)
class QMatrix:
    q: np.ndarray

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.q).copy()


def _dense(a) -> np.ndarray:
    if sp.issparse(a):
        return a.toarray()
    return np.asarray(a, dtype=np.float64)


def pinv_laplacian(L) -> PinvResult:
    """Moore-Penrose pseudo-inverse of a symmetric PSD matrix.

    Eigenvalues below ``1e-10 * max eigenvalue`` are treated as zero.
    """
    L = _dense(L)
    if L.ndim != 2 or L.shape[0] != L.shape[1]:
        raise GraphError(f"expected a square matrix, got shape {L.shape}")
    if L.size and np.max(np.abs(L - L.T)) > 1e-10 * max(1.0, np.max(np.abs(L))):
        raise GraphError("matrix is not symmetric")
    if L.size == 0:
        return PinvResult(np.zeros((0, 0)), 0, 0.0)
    vals, vecs = np.linalg.eigh(L)
    lam_max = float(np.max(np.abs(vals)))
    tol = ZERO_EIG_RTOL * lam_max
    keep = vals > tol if lam_max > 0 else np.zeros(len(vals), dtype=bool)
    u = vecs[:, keep]
    pinv = (u / vals[keep]) @ u.T
    pinv = 0.5 * (pinv + pinv.T)
    return PinvResult(pinv=pinv, rank=int(keep.sum()), eigen_tolerance=tol)


def _edge_quadratic(M: np.ndarray, g: Graph) -> np.ndarray:
    u, v = g.tail, g.head
    return M[u, u] + M[v, v] - M[u, v] - M[v, u]


def effective_resistance_all(g: Graph, pinv: np.ndarray | None = None) -> np.ndarray:
    """Effective resistance between the endpoints of every edge.

    Weighted graphs use conductances ``w(e)``, i.e. L = D - A with weights.
    """
    require_undirected(g, "effective resistance")
    if pinv is None:
        pinv = pinv_laplacian(laplacian(g)).pinv
    return _edge_quadratic(pinv, g)


def q_matrix(g: Graph) -> QMatrix:
    """Q = B L+ B^T for the signed incidence B of an unweighted graph.

    Q is the orthogonal projector onto the row space of B, so its diagonal
    holds the effective resistances and its trace is the rank of L.
    """
    require_undirected(g, "the Q matrix")
    require_unweighted(g, "the Q matrix")
    B = incidence_bundle(g).signed.toarray()
    pinv = pinv_laplacian(B.T @ B).pinv
    q = B @ pinv @ B.T
    return QMatrix(q=0.5 * (q + q.T))


def bareiss_determinant(M) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    a = [[int(x) for x in row] for row in M]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _integer_laplacian(n: int, edges) -> list[list[int]]:
    L = [[0] * n for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    return L


def count_spanning_trees(n: int, edges) -> int:
    """Kirchhoff's matrix-tree count for an unweighted multigraph.

    Loops in ``edges`` are ignored; parallel edges count separately.
    """
    if n <= 1:
        return 1
    L = _integer_laplacian(n, edges)
    return bareiss_determinant([row[1:] for row in L[1:]])


def spanning_tree_ratio(g: Graph, e: int) -> tuple[int, int, float]:
    """``(tau, tau_e, tau_e / tau)``: spanning trees, those containing edge
    ``e``, and their ratio, by exact integer arithmetic."""
    require_undirected(g, "spanning tree counting")
    require_unweighted(g, "spanning tree counting")
    if g.n > MATRIX_TREE_MAX_NODES:
        raise GraphError(f"matrix-tree oracle limited to n <= {MATRIX_TREE_MAX_NODES}")
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range")
    edges = list(zip(g.tail.tolist(), g.head.tolist()))
    tau = count_spanning_trees(g.n, edges)
    if tau == 0:
        raise GraphError("graph is disconnected: no spanning tree")

    # contract e: merge its head into its tail, compact the node ids
    a, b = edges[e]
    relabel = {}
    for x in range(g.n):
        y = a if x == b else x
        relabel.setdefault(y, len(relabel))
    contracted = [(relabel[a if u == b else u], relabel[a if v == b else v])
                  for i, (u, v) in enumerate(edges) if i != e]
    tau_e = count_spanning_trees(g.n - 1, contracted)
    return tau, tau_e, tau_e / tau


def _require_connected(g: Graph, what: str) -> None:
    if g.n == 0 or connected_components(g)[1] != 1:
        raise GraphError(f"{what} requires a connected graph")


def lambda2(g: Graph) -> float:
    """Smallest non-zero eigenvalue of the normalized Laplacian."""
    require_undirected(g, "lambda2")
    _require_connected(g, "lambda2")
    vals = np.linalg.eigvalsh(normalized_laplacian(g).toarray())
    tol = ZERO_EIG_RTOL * np.max(np.abs(vals))
    nonzero = vals[vals > tol]
    if len(nonzero) == 0:
        raise GraphError("normalized Laplacian has no non-zero eigenvalue")
    return float(nonzero.min())


def resistance_bounds(g: Graph, e: int | None = None, lam2: float | None = None):
    """Degree and triangle bounds on the effective resistance of edges.

    Returns ``(lower, upper_lovasz, upper_triangle)``; scalars for a single
    edge index ``e``, per-edge arrays when ``e`` is None. ``lower`` and
    ``upper_lovasz`` are the spectral-gap bounds
    ``0.5 (1/d_u + 1/d_v) <= r <= (1/lambda2) (1/d_u + 1/d_v)`` and
    ``upper_triangle = 2 / (2 + |N(u) & N(v)|)``.
    """
    require_unweighted(g, "resistance bounds")
    if lam2 is None:
        lam2 = lambda2(g)
    deg = g.out_strength
    nbrs = [set(g.other_end(int(x), v) for x in g.csr_out(v)) for v in range(g.n)]
    idx = np.arange(g.m) if e is None else np.array([e])
    if len(idx) and not (0 <= idx.min() and idx.max() < g.m):
        raise GraphError(f"edge index {e} out of range")
    u, v = g.tail[idx], g.head[idx]
    inv = 1.0 / deg[u] + 1.0 / deg[v]
    common = np.array([len(nbrs[a] & nbrs[b]) for a, b in zip(u, v)], dtype=float)
    lower = 0.5 * inv
    upper_lovasz = inv / lam2
    upper_triangle = 2.0 / (2.0 + common)
    if e is None:
        return lower, upper_lovasz, upper_triangle
    return float(lower[0]), float(upper_lovasz[0]), float(upper_triangle[0])
