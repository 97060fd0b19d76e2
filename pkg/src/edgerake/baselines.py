"""Baseline edge centralities: EB, ER, BDRC, EP, EK and GTOM.

None of the scores are normalised. Undirected graphs are handled by the
recursive measures (EP, EK) as bidirected arc pairs whose two arc scores are
summed per edge.
"""

from __future__ import annotations

from collections import deque

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .erwr import MAX_ITERATIONS, CentralityVector
from .graph import (Graph, GraphError, adjacency, laplacian, require_undirected,
                    require_unweighted)
from .spectral import effective_resistance_all, pinv_laplacian

DEFAULT_TOL = 1e-10
DIVERGENCE_WINDOW = 10


class ConvergenceError(RuntimeError):
    pass


def _arcs(g: Graph):
    """Arc arrays ``(tail, head, weight)``; undirected edges become two arcs,
    arc ``e`` and arc ``e + m`` for edge ``e``."""
    if g.directed:
        return g.tail, g.head, g.weight
    return (np.concatenate([g.tail, g.head]),
            np.concatenate([g.head, g.tail]),
            np.concatenate([g.weight, g.weight]))


def _fold_arcs(g: Graph, arc_scores: np.ndarray) -> np.ndarray:
    if g.directed:
        return arc_scores
    return arc_scores[:g.m] + arc_scores[g.m:]


def spectral_radius(g: Graph) -> float:
    """Largest |eigenvalue| of the weighted adjacency matrix."""
    A = adjacency(g)
    if g.n == 0 or A.nnz == 0:
        return 0.0
    if g.n <= 500:
        return float(np.max(np.abs(np.linalg.eigvals(A.toarray()))))
    val = spla.eigs(A.astype(float), k=1, which="LM", return_eigenvectors=False)
    return float(np.abs(val[0]))


def _recursive_arc_scores(g, coef, alpha, max_iters, tol, measure):
    tail, head, _ = _arcs(g)
    c = np.zeros(len(tail))
    delta = np.inf
    growing = 0
    checked_radius = False
    it = 0
    converged = False
    for it in range(1, max_iters + 1):
        inflow = np.bincount(head, weights=c, minlength=g.n)
        c_new = coef * (alpha * inflow[tail] + 1.0)
        new_delta = float(np.max(np.abs(c_new - c))) if len(c) else 0.0
        c = c_new
        if new_delta <= tol:
            converged = True
            break
        growing = growing + 1 if new_delta >= delta else 0
        delta = new_delta
        if measure == "ek" and growing >= DIVERGENCE_WINDOW and not checked_radius:
            # confirm with the spectral radius before giving up: transient
            # growth is possible on deep DAG-like graphs
            checked_radius = True
            rho = spectral_radius(g)
            if alpha * rho >= 1.0 - 1e-9:
                raise ConvergenceError(
                    f"edge Katz diverges: alpha * spectral_radius(A) = "
                    f"{alpha:g} * {rho:.6g} = {alpha * rho:.6g} >= 1")
    return c, it, converged


def edge_pagerank(g: Graph, alpha: float = 0.5, max_iters: int = MAX_ITERATIONS,
                  tol: float = DEFAULT_TOL) -> CentralityVector:
    """Fixed point of ``C(u,v) = w(u,v)/D[u] * (alpha * sum_x C(x,u) + 1)``."""
    if not 0.0 < alpha < 1.0:
        raise GraphError(f"alpha must lie in (0, 1), got {alpha!r}")
    tail, _, w = _arcs(g)
    d = g.out_strength[tail]
    # an arc's own weight is part of its tail's out-strength, so d > 0 here
    coef = w / d
    arc, iters, ok = _recursive_arc_scores(g, coef, alpha, max_iters, tol, "ep")
    return CentralityVector(_fold_arcs(g, arc), "ep",
                            {"alpha": alpha, "iterations": iters, "converged": ok,
                             "tol": tol})


def edge_katz(g: Graph, alpha: float = 0.5, max_iters: int = MAX_ITERATIONS,
              tol: float = DEFAULT_TOL) -> CentralityVector:
    """Fixed point of ``C(u,v) = w(u,v) * (alpha * sum_x C(x,u) + 1)``.

    Raises :class:`ConvergenceError` when the update keeps growing and
    ``alpha * rho(A) >= 1``.
    """
    if not 0.0 < alpha < 1.0:
        raise GraphError(f"alpha must lie in (0, 1), got {alpha!r}")
    _, _, w = _arcs(g)
    arc, iters, ok = _recursive_arc_scores(g, w.copy(), alpha, max_iters, tol, "ek")
    return CentralityVector(_fold_arcs(g, arc), "ek",
                            {"alpha": alpha, "iterations": iters, "converged": ok,
                             "tol": tol})


def recursive_residual(g: Graph, cv: CentralityVector) -> float:
    """Max violation of the EP/EK recurrence on a directed graph.

    Undirected scores are arc sums and cannot be checked this way; compute
    them on the bidirected graph instead.
    """
    if not g.directed:
        raise GraphError("recurrence residual is checked on directed graphs")
    alpha = cv.params["alpha"]
    c = np.asarray(cv.scores)
    inflow = np.bincount(g.head, weights=c, minlength=g.n)
    coef = g.weight / g.out_strength[g.tail] if cv.measure == "ep" else g.weight
    return float(np.max(np.abs(coef * (alpha * inflow[g.tail] + 1.0) - c),
                        initial=0.0))


def gtom(g: Graph) -> CentralityVector:
    """``(|N+(u) & N+(v)| + 1) / min(|N+(u)|, |N+(v)|)`` per edge."""
    require_unweighted(g, "GTOM")
    nbrs = [frozenset(g.other_end(int(e), v) for e in g.csr_out(v))
            for v in range(g.n)]
    scores = np.empty(g.m)
    bad = []
    for e, (u, v) in enumerate(zip(g.tail.tolist(), g.head.tolist())):
        lo = min(len(nbrs[u]), len(nbrs[v]))
        if lo == 0:
            bad.append(e)
            continue
        scores[e] = (len(nbrs[u] & nbrs[v]) + 1) / lo
    if bad:
        raise GraphError(f"GTOM undefined for edges {bad}: an endpoint has "
                         f"no out-neighbours")
    return CentralityVector(scores, "gtom", {})


def edge_betweenness(g: Graph) -> CentralityVector:
    """Shortest-path edge betweenness over ordered node pairs (Brandes).

    Undirected values are therefore twice the unordered-pair convention.
    """
    require_unweighted(g, "edge betweenness")
    n = g.n
    eb = np.zeros(g.m)
    tails, heads = g.tail.tolist(), g.head.tolist()
    adj = [[(int(e), heads[e] if tails[e] == v else tails[e]) for e in g.csr_out(v)]
           for v in range(n)]
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds = [[] for _ in range(n)]
        dist[s], sigma[s] = 0, 1
        order = []
        q = deque([s])
        while q:
            v = q.popleft()
            order.append(v)
            for e, w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    q.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append((e, v))
        delta = [0.0] * n
        for w in reversed(order):
            for e, v in preds[w]:
                c = sigma[v] / sigma[w] * (1.0 + delta[w])
                eb[e] += c
                delta[v] += c
    return CentralityVector(eb, "eb", {"pairs": "ordered"})


def bdrc(g: Graph, pinv: np.ndarray | None = None) -> CentralityVector:
    """Biharmonic-distance edge centrality ``w^2 * b^T (L+)^2 b``."""
    require_undirected(g, "BDRC")
    if pinv is None:
        pinv = pinv_laplacian(laplacian(g)).pinv
    sq = pinv @ pinv
    u, v = g.tail, g.head
    quad = sq[u, u] + sq[v, v] - sq[u, v] - sq[v, u]
    return CentralityVector(g.weight ** 2 * quad, "bdrc", {})


def effective_resistance_centrality(g: Graph) -> CentralityVector:
    return CentralityVector(effective_resistance_all(g), "er", {})


def node_pagerank_unnormalized(g: Graph, alpha: float = 0.5,
                               max_iters: int = 1000, tol: float = 1e-13) -> np.ndarray:
    """Node scores ``PR(u) = alpha * sum_{x->u} w(x,u)/D[x] PR(x) + 1``.

    The edge PageRank of arc ``(u, v)`` equals ``w(u,v)/D[u] * PR(u)``.
    """
    tail, head, w = _arcs(g)
    d = g.out_strength
    M = sp.csr_matrix((w / d[tail], (head, tail)), shape=(g.n, g.n))
    pr = np.ones(g.n)
    for _ in range(max_iters):
        nxt = alpha * (M @ pr) + 1.0
        if np.max(np.abs(nxt - pr), initial=0.0) <= tol:
            return nxt
        pr = nxt
    return pr
