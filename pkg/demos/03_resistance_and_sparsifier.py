# # Effective resistance and a sampled sparsifier
#
# Resistances come from the Laplacian pseudo-inverse. They sum to n - c,
# match the fraction of spanning trees through each edge, and make a sampling
# distribution whose reweighted draws reproduce the Laplacian on average.

# %%
import numpy as np

from edgerake import (build_graph, effective_resistance_all, laplacian,
                      resistance_bounds, sparsify, spanning_tree_ratio)
from edgerake.verify import random_graph

rng = np.random.Generator(np.random.PCG64(3))

# %%
g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 4)])
r = effective_resistance_all(g)
print("resistances", np.round(r, 4))
print("sum", r.sum(), "n - 1 =", g.n - 1)

# %% [markdown]
# Counting spanning trees with the integer matrix-tree determinant gives the
# same numbers.

# %%
for e in range(g.m):
    total, through, ratio = spanning_tree_ratio(g, e)
    print(e, through, "/", total, "=", round(ratio, 4), "vs", round(r[e], 4))

# %% [markdown]
# Cheap bounds from degrees, the spectral gap and shared neighbours.

# %%
lo, up_gap, up_tri = resistance_bounds(g)
for e in range(g.m):
    print(f"{lo[e]:.3f} <= {r[e]:.3f} <= {min(up_gap[e], up_tri[e]):.3f}")

# %% [markdown]
# Sample edges with probability r / (n - 1) and reweight so the expected
# sparsified Laplacian equals the original.

# %%
L = laplacian(g).toarray()
for n_s in (10, 100, 1000, 10000):
    s = sparsify(g, n_s, seed=1)
    err = np.linalg.norm(s.sparsified_laplacian.toarray() - L) / np.linalg.norm(L)
    print(f"n_s={n_s:5d} kept {len(s.support())}/{g.m} edges, rel. error {err:.3f}")

# %%
big = random_graph(rng, 60, p=0.2)
s = sparsify(big, 4 * big.n, seed=0)
print(big.m, "edges ->", len(s.support()), "sampled")
