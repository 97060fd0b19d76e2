import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgerake import (GraphError, build_graph, connected_components,
                      incidence_bundle, laplacian, normalized_adjacency)
from edgerake.graph import adjacency
from helpers import complete, path, star


def test_single_edge_undirected():
    g = build_graph([(0, 1, 1)])
    assert (g.n, g.m) == (2, 1)
    assert g.out_strength.tolist() == [1.0, 1.0]


def test_k3_regular(K3):
    assert K3.out_strength.tolist() == [2.0, 2.0, 2.0]


def test_directed_two_arcs():
    g = build_graph([(0, 1, 1), (1, 0, 1)], directed=True)
    assert g.m == 2
    assert g.out_strength.tolist() == [1.0, 1.0]


def test_parallel_edges_kept():
    g = build_graph([(0, 1), (0, 1, 2.0)])
    assert g.m == 2
    assert g.out_strength.tolist() == [3.0, 3.0]


@pytest.mark.parametrize("triples", [[(0, 1, 0.0)], [(0, 1, -1.0)], [(2, 2, 1.0)],
                                     [(0, 1, float("nan"))]])
def test_rejects_bad_edges(triples):
    with pytest.raises(GraphError):
        build_graph(triples)


def test_explicit_n_keeps_isolated_nodes():
    g = build_graph([], n=3)
    assert (g.n, g.m) == (3, 0)
    with pytest.raises(GraphError):
        build_graph([(0, 3)], n=3)


def test_graph_is_immutable(K3):
    with pytest.raises(ValueError):
        K3.weight[0] = 5.0
    with pytest.raises(AttributeError):
        K3.n = 4


def test_csr_out_directed_and_undirected():
    triples = [(0, 1), (2, 0), (0, 2), (1, 2)]
    d = build_graph(triples, directed=True)
    assert d.csr_out(0).tolist() == [0, 2]
    assert d.csr_out(1).tolist() == [3]
    u = build_graph(triples)
    assert u.csr_out(0).tolist() == [0, 1, 2]
    assert u.csr_out(2).tolist() == [1, 2, 3]


def test_incidence_single_undirected_edge():
    b = incidence_bundle(build_graph([(0, 1)]))
    assert b.jump_norm.toarray().ravel().tolist() == [0.5, 0.5]
    assert b.signed.toarray().tolist() == [[1.0, -1.0]]


def test_incidence_directed_edge_jumps_to_head():
    b = incidence_bundle(build_graph([(0, 1)], directed=True))
    assert b.jump_norm.toarray().ravel().tolist() == [0.0, 1.0]
    assert b.tail_inc.toarray().ravel().tolist() == [1.0, 0.0]
    assert b.head_inc.toarray().ravel().tolist() == [0.0, 1.0]


def test_incidence_weight_cancels_in_normalization():
    b = incidence_bundle(build_graph([(0, 1, 3.0)]))
    assert b.tail_inc.toarray().ravel().tolist() == [3.0, 3.0]
    assert b.jump_norm.toarray().ravel().tolist() == [0.5, 0.5]
    assert b.edge_degree.tolist() == [6.0]


def test_laplacian_small(P2, K3):
    assert laplacian(P2).toarray().tolist() == [[1, -1], [-1, 1]]
    assert np.array_equal(laplacian(K3).toarray(), 3 * np.eye(3) - np.ones((3, 3)))


def test_laplacian_rejects_directed():
    with pytest.raises(GraphError):
        laplacian(build_graph([(0, 1)], directed=True))


def test_laplacian_equals_signed_gram_on_random_graph(rng):
    n = 12
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    g = build_graph(pairs, n=n)
    # D - A built entry by entry, independent of the sparse constructors
    L = np.zeros((n, n), dtype=np.int64)
    for u, v in pairs:
        L[u, u] += 1
        L[v, v] += 1
        L[u, v] -= 1
        L[v, u] -= 1
    B = incidence_bundle(g).signed.toarray().astype(np.int64)
    assert np.array_equal(B.T @ B, L)
    assert np.array_equal(laplacian(g).toarray(), L)


def test_weighted_laplacian_is_signed_gram_with_weights(rng):
    g = build_graph([(0, 1, 2.0), (1, 2, 0.5), (0, 2, 3.0), (2, 3, 1.5)])
    B = incidence_bundle(g).signed.toarray()
    assert np.allclose(B.T @ np.diag(g.weight) @ B, laplacian(g).toarray())


def test_normalized_adjacency_examples(P2, K3):
    assert np.allclose(normalized_adjacency(P2).toarray(), [[0, 1], [1, 0]])
    a = normalized_adjacency(K3).toarray()
    assert np.allclose(a, 0.5 * (np.ones((3, 3)) - np.eye(3)))
    s = normalized_adjacency(star(3)).toarray()
    assert np.allclose(s[0, 1:], 1 / np.sqrt(3))


def test_normalized_adjacency_isolated_rows_zero():
    g = build_graph([(0, 1)], n=3)
    a = normalized_adjacency(g).toarray()
    assert not a[2].any()


@pytest.mark.parametrize("g, c", [
    (path(3), 1),
    (build_graph([(0, 1), (2, 3)]), 2),
    (build_graph([], n=3), 3),
])
def test_components_count(g, c):
    assert connected_components(g)[1] == c


def test_components_labels_follow_lowest_node():
    g = build_graph([(3, 4), (0, 2)], n=5)
    labels, c = connected_components(g)
    assert c == 3
    assert labels.tolist() == [0, 1, 0, 2, 2]


def test_components_weak_for_directed():
    g = build_graph([(0, 1), (2, 1)], directed=True)
    assert connected_components(g)[1] == 1


edge_lists = st.integers(2, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
                       st.floats(0.1, 10.0)).filter(lambda t: t[0] != t[1]),
             max_size=20),
    st.booleans()))


@settings(max_examples=60, deadline=None)
@given(edge_lists)
def test_graph_invariants(case):
    n, triples, directed = case
    g = build_graph(triples, directed=directed, n=n)
    # round trip preserves order
    assert g.edges == [(u, v, float(w)) for u, v, w in triples]
    b = incidence_bundle(g)
    if g.m:
        assert np.allclose(b.signed.sum(axis=1), 0)
        assert np.allclose(b.jump_norm.sum(axis=0), 1, atol=1e-12)
    total = sum(w for _, _, w in triples)
    assert np.isclose(g.out_strength.sum(), total if directed else 2 * total)
    # csr_out consistent with the edge arrays
    for v in range(n):
        expect = [e for e, (a, b_, _) in enumerate(triples)
                  if a == v or (not directed and b_ == v)]
        assert g.csr_out(v).tolist() == expect
    if not directed:
        assert np.allclose(adjacency(g).toarray(), adjacency(g).toarray().T)


def test_subgraph_keeps_order_and_nodes():
    g = build_graph([(0, 1), (1, 2), (2, 3)], n=5)
    h = g.subgraph([2, 0])
    assert h.n == 5
    assert h.edges == [(0, 1, 1.0), (2, 3, 1.0)]
    assert complete(4).subgraph(np.zeros(6, dtype=bool)).m == 0
