"""Random-graph checks of the walk, resistance and projector identities.

Each suite draws ``trials`` random graphs with at most ``n`` nodes and
returns a :class:`SuiteReport`; a non-empty ``violations`` list means an
identity failed beyond its tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .erwr import (TransitionOperator, edgerake_approx, edgerake_exact,
                   iterations_for_epsilon, approximation_bound, score_bracket)
from .graph import Graph, connected_components, from_arrays
from .spectral import effective_resistance_all, q_matrix

SUITES = ("lemma2", "lemma3", "theorem", "foster", "qmatrix", "balance")


@dataclass
class SuiteReport:
    suite: str
    trials: int = 0
    max_error: float = 0.0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, trial: int, what: str, err: float, tol: float) -> None:
        self.max_error = max(self.max_error, float(err))
        if not err <= tol:
            self.violations.append(f"trial {trial}: {what} error {err:.3e} > {tol:.0e}")

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return (f"{self.suite}: {self.trials} graphs, max error "
                f"{self.max_error:.3e}, {status}")


def random_graph(rng: np.random.Generator, n: int, p: float | None = None,
                 directed: bool = False, weighted: bool = False,
                 ensure_out_edges: bool = False, min_edges: int = 1) -> Graph:
    """Erdos-Renyi style graph on ``n`` nodes.

    ``ensure_out_edges`` adds arcs until every node that some arc points to
    has an out-edge of its own (no dangling jump targets).
    """
    if p is None:
        p = rng.uniform(0.1, 0.6)
    if directed:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = rng.random(len(pairs)) < p
    edges = [pairs[k] for k in np.flatnonzero(mask)]
    while len(edges) < min_edges and pairs:
        edges.append(pairs[rng.integers(len(pairs))])
    if directed and ensure_out_edges and n > 1:
        while True:
            out = np.zeros(n, dtype=bool)
            into = np.zeros(n, dtype=bool)
            for u, v in edges:
                out[u] = True
                into[v] = True
            dangling = np.flatnonzero(into & ~out)
            if not len(dangling):
                break
            for v in dangling:
                w = int(rng.integers(n - 1))
                edges.append((int(v), w if w < v else w + 1))
    # shuffle so edge order is not lexicographic
    edges = [edges[k] for k in rng.permutation(len(edges))]
    tail = [u for u, _ in edges]
    head = [v for _, v in edges]
    weight = rng.uniform(0.2, 5.0, size=len(edges)) if weighted else None
    return from_arrays(tail, head, weight, n=n, directed=directed)


def _sizes(rng, n_max, trials, n_min=2):
    return rng.integers(n_min, max(n_min, n_max) + 1, size=trials)


def check_stochastic(rng, n_max=30, trials=100) -> SuiteReport:
    """Rows of P sum to one; columns too on unweighted graphs whose nodes
    have equal in- and out-degree (always true when undirected)."""
    rep = SuiteReport("lemma2")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        directed = bool(k % 2)
        g = random_graph(rng, int(n), directed=directed, weighted=bool((k // 2) % 2),
                         ensure_out_edges=True)
        P = TransitionOperator(g).dense()
        rep.record(k, "row sum", np.max(np.abs(P.sum(axis=1) - 1.0)), 1e-10)
        rep.record(k, "negative entry", max(0.0, -P.min()), 0.0)
        indeg = np.bincount(g.head, minlength=g.n)
        outdeg = np.bincount(g.tail, minlength=g.n)
        balanced = not g.directed or np.array_equal(indeg, outdeg)
        if not g.weighted and balanced:
            rep.record(k, "column sum", np.max(np.abs(P.sum(axis=0) - 1.0)), 1e-10)
        rep.trials += 1
    return rep


def check_balance(rng, n_max=20, trials=50, max_power=4) -> SuiteReport:
    """``w_i P^l[i, j] == w_j P^l[j, i]`` on undirected weighted graphs."""
    rep = SuiteReport("balance")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        g = random_graph(rng, int(n), weighted=True)
        P = TransitionOperator(g).dense()
        w = g.weight
        Pl = np.eye(g.m)
        for ell in range(1, max_power + 1):
            Pl = Pl @ P
            lhs = w[:, None] * Pl
            diff = np.abs(lhs - lhs.T)
            scale = np.maximum(np.abs(lhs), np.abs(lhs.T))
            rel = np.max(np.divide(diff, scale, out=np.zeros_like(diff),
                                   where=scale > 0))
            rep.record(k, f"detailed balance l={ell}", rel, 1e-10)
        rep.trials += 1
    return rep


def check_range(rng, n_max=30, trials=50, alpha=0.5) -> SuiteReport:
    """Exact EdgeRAKE scores lie in ``[w/max s, w/min s]``."""
    rep = SuiteReport("lemma3")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        g = random_graph(rng, int(n), weighted=bool(k % 2))
        c = edgerake_exact(g, alpha).scores
        lo, hi = score_bracket(g)
        err = max(np.max(lo - c, initial=0.0), np.max(c - hi, initial=0.0), 0.0)
        rep.record(k, "range", err, 1e-10)
        rep.trials += 1
    return rep


def check_truncation(rng, n_max=30, trials=50,
                     alphas=(0.3, 0.5, 0.85), epsilons=(1e-2, 1e-4)) -> SuiteReport:
    """``0 <= C - C' <= w eps / min s`` for the iteration count from eps."""
    rep = SuiteReport("theorem")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        g = random_graph(rng, int(n), weighted=bool(k % 2))
        alpha = alphas[k % len(alphas)]
        c = edgerake_exact(g, alpha).scores
        for eps in epsilons:
            t = iterations_for_epsilon(alpha, eps)
            gap = c - edgerake_approx(g, alpha, t).scores
            bound = approximation_bound(g, eps)
            rep.record(k, f"lower eps={eps:g}", max(0.0, -gap.min()), 0.0)
            rep.record(k, f"upper eps={eps:g}", max(0.0, np.max(gap - bound)), 1e-12)
        rep.trials += 1
    return rep


def check_foster(rng, n_max=30, trials=100) -> SuiteReport:
    """Sum of edge resistances equals ``n - c``."""
    rep = SuiteReport("foster")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        g = random_graph(rng, int(n), p=rng.uniform(0.02, 0.5))
        c = connected_components(g)[1]
        total = effective_resistance_all(g).sum()
        rep.record(k, "resistance sum", abs(total - (g.n - c)), 1e-8)
        rep.trials += 1
    return rep


def check_qmatrix(rng, n_max=30, trials=50) -> SuiteReport:
    """Q is an orthogonal projector of trace ``n - c`` with the resistances
    on its diagonal."""
    rep = SuiteReport("qmatrix")
    for k, n in enumerate(_sizes(rng, n_max, trials)):
        g = random_graph(rng, int(n), p=rng.uniform(0.05, 0.5))
        q = q_matrix(g).q
        c = connected_components(g)[1]
        r = effective_resistance_all(g)
        rep.record(k, "diagonal", np.max(np.abs(np.diag(q) - r)), 1e-10)
        rep.record(k, "idempotence", np.linalg.norm(q @ q - q), 1e-8)
        rep.record(k, "trace", abs(np.trace(q) - (g.n - c)), 1e-8)
        rep.trials += 1
    return rep


_RUNNERS = {
    "lemma2": check_stochastic,
    "balance": check_balance,
    "lemma3": check_range,
    "theorem": check_truncation,
    "foster": check_foster,
    "qmatrix": check_qmatrix,
}


def run_suite(name: str, n: int = 20, trials: int = 50, seed: int = 0) -> SuiteReport:
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return _RUNNERS[name](rng, n_max=n, trials=trials)
