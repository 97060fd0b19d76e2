# # Edge walk scores on small graphs
#
# Build a few toy graphs, score every edge with EdgeRAKE and look at how the
# truncated power iteration approaches the exact closed form.

# %%
import numpy as np

from edgerake import (build_graph, edgerake, edgerake_approx, edgerake_exact,
                      erwr_scores, iterations_for_epsilon)
from edgerake.erwr import approximation_bound, score_bracket

np.set_printoptions(precision=6, suppress=True)

# %% [markdown]
# A path on four nodes. The two outer edges mirror each other, the middle one
# sits between two degree-2 nodes.

# %%
p4 = build_graph([(0, 1), (1, 2), (2, 3)])
exact = edgerake_exact(p4, 0.5).scores
print("exact  ", exact)
print("default", edgerake(p4).scores)

# %% [markdown]
# Where does a walk that restarts on the first edge end up? The per-source
# scores form a probability vector.

# %%
r = erwr_scores(p4, 0.5, source=0)
print(r, r.sum())

# %% [markdown]
# Truncation: `t` power iterations leave a gap that never goes negative and
# stays under the per-edge bound derived from the node strengths.

# %%
for eps in (1e-1, 1e-2, 1e-4, 1e-8):
    t = iterations_for_epsilon(0.5, eps)
    gap = exact - edgerake_approx(p4, 0.5, t).scores
    print(f"eps={eps:g} t={t:2d} max gap={gap.max():.2e} "
          f"bound={approximation_bound(p4, eps).max():.2e}")

# %% [markdown]
# On regular graphs every edge gets the same score, and the bracket from the
# strengths collapses to a point: 1/sqrt(2d).

# %%
k5 = build_graph([(i, j) for i in range(5) for j in range(i + 1, 5)])
print(edgerake_exact(k5, 0.5).scores, 1 / np.sqrt(8))
lo, hi = score_bracket(p4)
print("P4 bracket", lo, hi)

# %% [markdown]
# Weighted edges: a heavy bridge between two triangles.

# %%
g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3, 4.0), (3, 4), (4, 5), (5, 3)])
for (u, v, w), s in zip(g.edges, edgerake(g).scores):
    print(f"{u}-{v} w={w:g} score={s:.4f}")
