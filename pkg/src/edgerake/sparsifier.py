"""Effective-resistance sampling of edges into a sparsified Laplacian."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import (Graph, GraphError, connected_components, incidence_bundle,
                    require_undirected)
from .spectral import effective_resistance_all


class AliasTable:
    """Vose's alias method: O(m) setup, O(1) categorical draws."""

    def __init__(self, p):
        p = np.asarray(p, dtype=np.float64)
        if p.ndim != 1 or len(p) == 0 or np.any(p < 0) or not p.sum() > 0:
            raise ValueError("need a non-empty vector of non-negative weights")
        k = len(p)
        scaled = p * (k / p.sum())
        prob = np.ones(k)
        alias = np.arange(k)
        small = [i for i in range(k) if scaled[i] < 1.0]
        large = [i for i in range(k) if scaled[i] >= 1.0]
        while small and large:
            s, l = small.pop(), large.pop()
            prob[s] = scaled[s]
            alias[s] = l
            scaled[l] = scaled[l] + scaled[s] - 1.0
            (small if scaled[l] < 1.0 else large).append(l)
        # leftovers are 1 up to round-off
        for i in small + large:
            prob[i] = 1.0
        self.prob = prob
        self.alias = alias

    def sample(self, rng: np.random.Generator, size: int) -> np.ndarray:
        k = len(self.prob)
        col = rng.integers(0, k, size=size)
        coin = rng.random(size)
        return np.where(coin < self.prob[col], col, self.alias[col])


@dataclass(frozen=True, eq=False)
class SparsifierSample:
    probabilities: np.ndarray
    counts: np.ndarray
    n_s: int
    seed: int | None
    sparse_weights: np.ndarray
    sparsified_laplacian: sp.csr_matrix

    def support(self) -> np.ndarray:
        return np.flatnonzero(self.counts)

    def graph(self, g: Graph) -> Graph:
        """The reweighted graph on the sampled edges of ``g``."""
        keep = self.support()
        return g.subgraph(keep).reweighted(self.sparse_weights[keep])


def sampling_probabilities(g: Graph, resistances: np.ndarray | None = None) -> np.ndarray:
    """``p_e = w(e) r(e) / (n - 1)`` on a connected undirected graph.

    On unweighted graphs this is ``r(e) / (n - 1)``, which sums to one by
    Foster's theorem; on weighted graphs ``w r`` are the leverage scores,
    which also sum to ``n - 1``.
    """
    require_undirected(g, "resistance sampling")
    if g.m == 0 or connected_components(g)[1] != 1:
        raise GraphError("resistance sampling requires a connected graph with edges")
    r = effective_resistance_all(g) if resistances is None else resistances
    return g.weight * r / (g.n - 1)


def sparsify(g: Graph, n_s: int, seed: int | None = None,
             biased_weights: bool = False,
             rng: np.random.Generator | None = None) -> SparsifierSample:
    """Draw ``n_s`` edges i.i.d. with probability ``p_e`` and reweight.

    The default weight ``S[e] = counts[e] / (n_s p_e) * w(e)`` makes
    ``L' = B^T S B`` an unbiased estimator of L. ``biased_weights`` switches
    to ``counts[e] / n_s * r(e) / (n - 1)``, kept for comparison only.
    ``rng`` overrides ``seed`` (PCG64 stream).
    """
    if n_s < 1:
        raise GraphError("n_s must be at least 1")
    r = effective_resistance_all(g)
    p = sampling_probabilities(g, r)
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(seed))
    draws = AliasTable(p).sample(rng, int(n_s))
    counts = np.bincount(draws, minlength=g.m)
    if biased_weights:
        s = counts / n_s * r / (g.n - 1)
    else:
        s = counts / (n_s * p) * g.weight
    B = incidence_bundle(g).signed
    L_prime = (B.T @ sp.diags(s) @ B).tocsr()
    return SparsifierSample(probabilities=p, counts=counts, n_s=int(n_s), seed=seed,
                            sparse_weights=s, sparsified_laplacian=L_prime)
