"""EdgeRAKE edge centrality, baseline edge centralities and resistance
sparsification on numpy/scipy."""

from .baselines import (ConvergenceError, bdrc, edge_betweenness, edge_katz,
                        edge_pagerank, effective_resistance_centrality, gtom)
from .erwr import (CentralityVector, TransitionOperator, edgerake,
                   edgerake_approx, edgerake_exact, erwr_scores,
                   iterations_for_epsilon, source_weights, transition_apply)
from .graph import (Graph, GraphError, IncidenceBundle, build_graph, from_arrays,
                    connected_components, incidence_bundle, laplacian,
                    normalized_adjacency)
from .io import parse_edge_list, residual_graph, write_edge_list, write_rankings
from .sparsifier import SparsifierSample, sampling_probabilities, sparsify
from .spectral import (PinvResult, QMatrix, effective_resistance_all, lambda2,
                       pinv_laplacian, q_matrix, resistance_bounds,
                       spanning_tree_ratio)

__version__ = "0.1.0"
