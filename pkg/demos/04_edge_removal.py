# # Removing edges by rank
#
# Rank the edges of a small graph, then delete a fraction of the least
# central ones and see what is left. The same steps are available from the
# command line:
#
#     edgerake rank --measure erk -i graph.txt -o ranks.csv
#     edgerake residual -i graph.txt --scores ranks.csv --rho 0.3 -o kept.txt

# %%
import io
import sys

from edgerake import connected_components, edgerake, parse_edge_list
from edgerake.io import residual_graph, write_edge_list, write_rankings

text = """\
# two communities and a bridge
alice bob
alice carol
bob carol
carol dave
dave erin
dave frank
erin frank
frank gina
"""
doc, g = parse_edge_list(io.StringIO(text))

# %%
scores = edgerake(g).scores
write_rankings(g, scores, sys.stdout, doc.node_labels)

# %% [markdown]
# Drop the lowest-scoring 25% and 50% of the edges. Removal sets are nested,
# and ties are broken by edge order.

# %%
for rho in (0.25, 0.5):
    h = residual_graph(g, scores, rho, order="asc")
    print(f"rho={rho}: {h.m} edges left, {connected_components(h)[1]} components")
    write_edge_list(h, sys.stdout, doc.node_labels)

# %% [markdown]
# Removing from the top instead strips the outlying edges first: their
# endpoints have low degree, which is what the walk score rewards.

# %%
for rho in (0.25, 0.5):
    h = residual_graph(g, scores, rho, order="desc")
    print(f"rho={rho} desc: {connected_components(h)[1]} components")
    write_edge_list(h, sys.stdout, doc.node_labels)
