# # Comparing edge centralities
#
# Two cliques joined by a single bridge. Path-based and spectral measures
# (eb, er, bdrc) put the bridge on top, overlap (gtom) puts it at the bottom,
# and the walk scores (erk, ep) rank it just below the clique edges because
# its endpoints have the highest degree.

# %%
from edgerake import (bdrc, build_graph, edge_betweenness, edge_katz,
                      edge_pagerank, edgerake, effective_resistance_centrality,
                      gtom)
from edgerake.baselines import ConvergenceError, spectral_radius

clique = [(i, j) for i in range(4) for j in range(i + 1, 4)]
edges = clique + [(u + 4, v + 4) for u, v in clique] + [(3, 4)]
g = build_graph(edges)
bridge = len(edges) - 1

# %%
measures = {
    "erk": edgerake(g),
    "ep": edge_pagerank(g),
    "gtom": gtom(g),
    "eb": edge_betweenness(g),
    "er": effective_resistance_centrality(g),
    "bdrc": bdrc(g),
}
for name, cv in measures.items():
    s = cv.scores
    print(f"{name:5s} bridge={s[bridge]:.4f} clique mean={s[:-1].mean():.4f}")

# %% [markdown]
# Edge Katz only converges when alpha times the adjacency spectral radius is
# below one. Here the radius is a bit over 3.

# %%
rho = spectral_radius(g)
print("spectral radius", rho)
print(edge_katz(g, 0.9 / rho).scores[bridge])
try:
    edge_katz(g, 0.5)
except ConvergenceError as exc:
    print("diverges:", exc)

# %% [markdown]
# Edge betweenness counts ordered node pairs, so every undirected value is
# twice the unordered convention: the bridge carries 4 * 4 pairs each way.

# %%
print(measures["eb"].scores[bridge], 2 * 16)
