"""Edge-wise random walk with restart (ERWR) and EdgeRAKE centrality.

A walk sitting on edge ``e_i`` stops there with probability ``1 - alpha``.
Otherwise it jumps to an endpoint of ``e_i`` (the head if directed, either
endpoint with probability 1/2 if undirected) and leaves that node along an
out-edge chosen proportionally to its weight. The one-step edge-to-edge
matrix is ``P = Ehat^T D^-1 E``; it is never materialised by the iterative
path, which applies it as two sparse mat-vecs through an n-vector.

EdgeRAKE weights every source edge ``e_i = (u_i, v_i)`` by
``w(e_i) / sqrt(D[u_i] + D[v_i])`` and sums the ERWR probabilities of
ending on ``e``::

    C = (1 - alpha) * x (I - alpha P)^-1
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .graph import Graph, GraphError, IncidenceBundle, incidence_bundle

DEFAULT_ALPHA = 0.5
DEFAULT_EPSILON = 1e-6
MAX_ITERATIONS = 150
ORACLE_MAX_EDGES = 2000


@dataclass(frozen=True)
class CentralityVector:
    """Per-edge scores, aligned with the graph's edge order."""

    scores: np.ndarray
    measure: str
    params: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.scores)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.scores, dtype=dtype)


class TransitionOperator:
    """Implicit ``P = Ehat^T D^-1 E`` acting on per-edge row vectors.

    ``z P`` is evaluated as a scatter of ``z`` onto jump nodes (``Ehat z``)
    followed by a gather of ``w(e) / D[v]`` over each edge's leave nodes,
    both O(m) with no matrix assembly.

    Nodes with zero out-strength get a zero ``D^-1`` entry, so walks that
    jump onto them are absorbed (P becomes sub-stochastic on those rows).
    """

    def __init__(self, g: Graph, bundle: IncidenceBundle | None = None):
        self.graph = g
        self._bundle = bundle
        d = g.out_strength
        inv_d = np.zeros_like(d)
        inv_d[d > 0] = 1.0 / d[d > 0]
        self.inv_strength = inv_d

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def bundle(self) -> IncidenceBundle:
        if self._bundle is None:
            self._bundle = incidence_bundle(self.graph)
        return self._bundle

    def apply(self, z: np.ndarray) -> np.ndarray:
        """Return ``z P`` for a length-m row vector ``z``."""
        g = self.graph
        n = g.n
        if g.directed:
            y = np.bincount(g.head, weights=z, minlength=n) * self.inv_strength
            return g.weight * y[g.tail]
        y = (np.bincount(g.tail, weights=z, minlength=n) +
             np.bincount(g.head, weights=z, minlength=n)) * (0.5 * self.inv_strength)
        return g.weight * (y[g.tail] + y[g.head])

    def dense(self) -> np.ndarray:
        """Materialise P as an m x m array (tests and oracles only)."""
        b = self.bundle
        leave = sp.diags(self.inv_strength) @ b.tail_inc
        return (b.jump_norm.T @ leave).toarray()

    def has_dangling_targets(self) -> bool:
        g = self.graph
        targets = g.head if g.directed else np.concatenate([g.tail, g.head])
        return bool(np.any(g.out_strength[targets] <= 0))


def source_weights(g: Graph) -> np.ndarray:
    """``x[e] = w(e) / sqrt(D[u] + D[v])`` for every edge ``e = (u, v)``."""
    d = g.out_strength
    return g.weight / np.sqrt(d[g.tail] + d[g.head])


def transition_apply(op: TransitionOperator, z, x, alpha: float) -> np.ndarray:
    """One EdgeRAKE iteration: ``alpha * (z P) + x``."""
    z = np.asarray(z, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    if z.shape != (op.m,) or x.shape != (op.m,):
        raise GraphError(f"vectors must have length m={op.m}, "
                         f"got {z.shape} and {x.shape}")
    return alpha * op.apply(z) + x


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise GraphError(f"alpha must lie in (0, 1), got {alpha!r}")


def iterations_for_epsilon(alpha: float, epsilon: float) -> int:
    """Smallest ``t >= 0`` with ``alpha ** (t + 1) <= epsilon``."""
    _check_alpha(alpha)
    if not 0.0 < epsilon <= 1.0:
        raise GraphError(f"epsilon must lie in (0, 1], got {epsilon!r}")
    t = max(0, math.ceil(math.log(epsilon) / math.log(alpha)) - 1)
    # guard the ceiling against log round-off in both directions
    while t > 0 and alpha ** t <= epsilon:
        t -= 1
    while alpha ** (t + 1) > epsilon:
        t += 1
    return t


def edgerake_approx(g: Graph, alpha: float, t: int,
                    op: TransitionOperator | None = None,
                    history: list | None = None) -> CentralityVector:
    """Truncated EdgeRAKE after ``t`` power iterations, O(m t).

    If ``history`` is a list, the l2 norm of every update ``z_k - z_{k-1}``
    is appended to it.
    """
    _check_alpha(alpha)
    if t < 0:
        raise GraphError("t must be non-negative")
    op = op if op is not None else TransitionOperator(g)
    x = source_weights(g)
    z = x.copy()
    for _ in range(t):
        z_new = transition_apply(op, z, x, alpha)
        if history is not None:
            history.append(float(np.linalg.norm(z_new - z)))
        z = z_new
    return CentralityVector((1.0 - alpha) * z, "erk",
                            {"alpha": alpha, "iterations": int(t)})


def edgerake(g: Graph, alpha: float = DEFAULT_ALPHA,
             epsilon: float = DEFAULT_EPSILON,
             iterations: int | None = None,
             max_iterations: int = MAX_ITERATIONS) -> CentralityVector:
    """EdgeRAKE with the iteration count chosen from ``epsilon`` (or given),
    capped at ``max_iterations``."""
    if iterations is None:
        iterations = iterations_for_epsilon(alpha, epsilon)
    t = min(int(iterations), max_iterations)
    cv = edgerake_approx(g, alpha, t)
    cv.params["epsilon"] = epsilon
    return cv


def _resolvent_rows(g: Graph, alpha: float, rhs: np.ndarray) -> np.ndarray:
    """Solve ``y (I - alpha P) = rhs`` for row vector(s) ``y``."""
    if g.m > ORACLE_MAX_EDGES:
        raise GraphError(f"dense oracle limited to m <= {ORACLE_MAX_EDGES}")
    P = TransitionOperator(g).dense()
    A = np.eye(g.m) - alpha * P
    return np.linalg.solve(A.T, rhs.T).T


def edgerake_exact(g: Graph, alpha: float = DEFAULT_ALPHA) -> CentralityVector:
    """Closed-form EdgeRAKE by a dense linear solve (oracle scale)."""
    _check_alpha(alpha)
    if g.m == 0:
        return CentralityVector(np.zeros(0), "erk-exact", {"alpha": alpha})
    c = (1.0 - alpha) * _resolvent_rows(g, alpha, source_weights(g))
    return CentralityVector(c, "erk-exact", {"alpha": alpha})


def erwr_scores(g: Graph, alpha: float, source: int,
                t: int | None = None) -> np.ndarray:
    """ERWR probabilities ``r(source, .)`` of a walk ending on each edge.

    Exact by a dense solve when ``t`` is None, otherwise the series
    truncated after ``alpha ** t``.
    """
    _check_alpha(alpha)
    if not 0 <= source < g.m:
        raise GraphError(f"source edge {source} out of range for m={g.m}")
    e = np.zeros(g.m)
    e[source] = 1.0
    if t is None:
        return (1.0 - alpha) * _resolvent_rows(g, alpha, e)
    op = TransitionOperator(g)
    z = e.copy()
    for _ in range(t):
        z = transition_apply(op, z, e, alpha)
    return (1.0 - alpha) * z


def score_bracket(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Per-edge ``[w(e)/max_i s_i, w(e)/min_i s_i]`` with
    ``s_i = sqrt(D[u_i] + D[v_i])``."""
    d = g.out_strength
    s = np.sqrt(d[g.tail] + d[g.head])
    return g.weight / s.max(), g.weight / s.min()


def approximation_bound(g: Graph, epsilon: float) -> np.ndarray:
    """Per-edge truncation error bound ``w(e) eps / min_i s_i``."""
    return score_bracket(g)[1] * epsilon
