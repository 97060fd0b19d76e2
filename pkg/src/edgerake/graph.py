"""Immutable edge-indexed graphs and their matrix views.

Nodes are dense integers ``0..n-1``; edges keep insertion order for the
lifetime of a :class:`Graph`, so every per-edge vector in this package is
aligned with ``graph.tail`` / ``graph.head`` / ``graph.weight``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components as _cc


class GraphError(ValueError):
    """Raised for malformed graphs or inputs outside an operation's domain."""


def _frozen(a, dtype):
    a = np.ascontiguousarray(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Directed or undirected weighted multigraph without self-loops.

    ``indptr``/``out_edges`` form a CSR index over edge ids: for directed
    graphs node ``v`` lists the edges whose tail is ``v``; for undirected
    graphs it lists every edge incident to ``v``. ``out_strength`` is the
    diagonal of the out-degree matrix D.
    """

    n: int
    directed: bool
    tail: np.ndarray
    head: np.ndarray
    weight: np.ndarray
    indptr: np.ndarray
    out_edges: np.ndarray
    out_strength: np.ndarray

    @property
    def m(self) -> int:
        return len(self.tail)

    @property
    def edges(self) -> list[tuple[int, int, float]]:
        return [(int(u), int(v), float(w))
                for u, v, w in zip(self.tail, self.head, self.weight)]

    @property
    def weighted(self) -> bool:
        return bool(np.any(self.weight != 1.0))

    def csr_out(self, v: int) -> np.ndarray:
        """Sorted edge ids leaving ``v`` (incident to ``v`` if undirected)."""
        return self.out_edges[self.indptr[v]:self.indptr[v + 1]]

    def other_end(self, e: int, v: int) -> int:
        u, w = int(self.tail[e]), int(self.head[e])
        return w if v == u else u

    def subgraph(self, keep) -> "Graph":
        """Graph on the same node set keeping edges selected by ``keep``
        (boolean mask or index array), in their original order."""
        keep = np.asarray(keep)
        if keep.dtype == bool:
            keep = np.flatnonzero(keep)
        keep = np.sort(keep)
        return from_arrays(self.tail[keep], self.head[keep], self.weight[keep],
                           n=self.n, directed=self.directed)

    def reweighted(self, weight) -> "Graph":
        return from_arrays(self.tail, self.head, weight, n=self.n,
                           directed=self.directed)

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, n={self.n}, m={self.m})"


def from_arrays(tail, head, weight=None, n: int | None = None,
                directed: bool = False) -> Graph:
    """Vectorised constructor used by :func:`build_graph` and internally."""
    tail = np.asarray(tail, dtype=np.int64).ravel()
    head = np.asarray(head, dtype=np.int64).ravel()
    if tail.shape != head.shape:
        raise GraphError("tail and head must have the same length")
    m = len(tail)
    if weight is None:
        weight = np.ones(m)
    weight = np.asarray(weight, dtype=np.float64).ravel()
    if weight.shape != tail.shape:
        raise GraphError("one weight per edge is required")

    if n is None:
        n = int(max(tail.max(initial=-1), head.max(initial=-1)) + 1)
    if m:
        if tail.min() < 0 or head.min() < 0:
            raise GraphError("node indices must be non-negative")
        if max(tail.max(), head.max()) >= n:
            raise GraphError(f"node index out of range for n={n}")
    bad = np.flatnonzero(~(weight > 0) | ~np.isfinite(weight))
    if len(bad):
        e = int(bad[0])
        raise GraphError(f"edge {e} has non-positive weight {weight[e]!r}")
    loops = np.flatnonzero(tail == head)
    if len(loops):
        e = int(loops[0])
        raise GraphError(f"edge {e} is a self-loop on node {int(tail[e])}")

    ids = np.arange(m, dtype=np.int64)
    if directed:
        key, eid = tail, ids
        out_strength = np.bincount(tail, weights=weight, minlength=n)
    else:
        key = np.concatenate([tail, head])
        eid = np.concatenate([ids, ids])
        out_strength = (np.bincount(tail, weights=weight, minlength=n)
                        + np.bincount(head, weights=weight, minlength=n))
    # stable sort on node, then on edge id inside each node bucket
    order = np.lexsort((eid, key))
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(key, minlength=n), out=indptr[1:])

    return Graph(
        n=int(n),
        directed=bool(directed),
        tail=_frozen(tail, np.int64),
        head=_frozen(head, np.int64),
        weight=_frozen(weight, np.float64),
        indptr=_frozen(indptr, np.int64),
        out_edges=_frozen(eid[order], np.int64),
        out_strength=_frozen(out_strength, np.float64),
    )


def build_graph(edge_triples: Iterable[Sequence], directed: bool = False,
                n: int | None = None) -> Graph:
    """Build a :class:`Graph` from ``(tail, head[, weight])`` tuples.

    Node ids must already be dense. ``n`` defaults to ``max id + 1``; pass it
    explicitly to keep trailing isolated nodes. Parallel edges are kept as
    distinct edges.

    >>> build_graph([(0, 1, 1.0)]).out_strength.tolist()
    [1.0, 1.0]
    """
    tails, heads, weights = [], [], []
    for t in edge_triples:
        if len(t) == 2:
            u, v, w = t[0], t[1], 1.0
        elif len(t) == 3:
            u, v, w = t
        else:
            raise GraphError(f"expected (tail, head[, weight]), got {t!r}")
        tails.append(u)
        heads.append(v)
        weights.append(w)
    return from_arrays(tails, heads, weights, n=n, directed=directed)


def require_undirected(g: Graph, what: str) -> None:
    if g.directed:
        raise GraphError(f"{what} is defined for undirected graphs only")


def require_unweighted(g: Graph, what: str) -> None:
    if g.weighted:
        raise GraphError(f"{what} is defined for unweighted graphs only")


@dataclass(frozen=True, eq=False)
class IncidenceBundle:
    """The incidence matrices used by the package.

    signed
        m x n, +1 at the tail and -1 at the head of each edge.
    tail_inc
        n x m, ``w(e)`` at the node(s) the walk may leave through ``e``
        (tail for directed edges, both endpoints for undirected ones).
    head_inc
        n x m, ``w(e)`` at the node(s) a walk on ``e`` may jump to
        (head for directed edges, both endpoints for undirected ones).
    jump_norm
        ``head_inc`` with unit column sums.
    """

    signed: sp.csr_matrix
    tail_inc: sp.csr_matrix
    head_inc: sp.csr_matrix
    jump_norm: sp.csr_matrix

    @property
    def edge_degree(self) -> np.ndarray:
        """Column sums of ``head_inc`` (w(e) directed, 2 w(e) undirected)."""
        return np.asarray(self.head_inc.sum(axis=0)).ravel()


def incidence_bundle(g: Graph) -> IncidenceBundle:
    m, n = g.m, g.n
    ids = np.arange(m)
    signed = sp.csr_matrix(
        (np.concatenate([np.ones(m), -np.ones(m)]),
         (np.concatenate([ids, ids]), np.concatenate([g.tail, g.head]))),
        shape=(m, n))

    if g.directed:
        tail_inc = sp.csr_matrix((g.weight, (g.tail, ids)), shape=(n, m))
        head_inc = sp.csr_matrix((g.weight, (g.head, ids)), shape=(n, m))
        jump_norm = sp.csr_matrix((np.ones(m), (g.head, ids)), shape=(n, m))
    else:
        rows = np.concatenate([g.tail, g.head])
        cols = np.concatenate([ids, ids])
        full = sp.csr_matrix((np.concatenate([g.weight, g.weight]), (rows, cols)),
                             shape=(n, m))
        tail_inc = head_inc = full
        # w / (w + w): exactly one half, independent of the weight
        jump_norm = sp.csr_matrix((np.full(2 * m, 0.5), (rows, cols)),
                                  shape=(n, m))
    return IncidenceBundle(signed=signed, tail_inc=tail_inc,
                           head_inc=head_inc, jump_norm=jump_norm)


def adjacency(g: Graph) -> sp.csr_matrix:
    """Weighted adjacency, parallel edges summed; symmetric if undirected."""
    a = sp.csr_matrix((g.weight, (g.tail, g.head)), shape=(g.n, g.n))
    if not g.directed:
        a = a + a.T
    return a.tocsr()


def laplacian(g: Graph) -> sp.csr_matrix:
    """L = D - A of an undirected graph (sparse)."""
    require_undirected(g, "the Laplacian")
    return (sp.diags(g.out_strength) - adjacency(g)).tocsr()


def normalized_adjacency(g: Graph) -> sp.csr_matrix:
    """D^{-1/2} A D^{-1/2}; rows of isolated nodes are zero."""
    require_undirected(g, "the normalized adjacency")
    d = g.out_strength
    inv_sqrt = np.zeros_like(d)
    nz = d > 0
    inv_sqrt[nz] = 1.0 / np.sqrt(d[nz])
    s = sp.diags(inv_sqrt)
    return (s @ adjacency(g) @ s).tocsr()


def normalized_laplacian(g: Graph) -> sp.csr_matrix:
    """I - D^{-1/2} A D^{-1/2} restricted to non-isolated nodes.

    Isolated nodes get a zero row and column.
    """
    a_hat = normalized_adjacency(g)
    return (sp.diags((g.out_strength > 0).astype(float)) - a_hat).tocsr()


def connected_components(g: Graph) -> tuple[np.ndarray, int]:
    """Weakly connected components, numbered by their lowest node index."""
    if g.n == 0:
        return np.zeros(0, dtype=np.int64), 0
    c, labels = _cc(adjacency(g), directed=g.directed, connection="weak")
    # relabel so component k is the k-th one met scanning nodes 0..n-1
    _, first = np.unique(labels, return_index=True)
    rank = np.empty(c, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(c)
    return rank[labels], int(c)
