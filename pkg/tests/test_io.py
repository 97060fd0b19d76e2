import io as stdio

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgerake import build_graph, edgerake
from edgerake.graph import GraphError
from edgerake.io import (EdgeListError, parse_edge_list, ranks, read_rankings,
                         removal_order, residual_graph, write_document,
                         write_edge_list, write_rankings)
from helpers import path


def parse(text, directed=False):
    return parse_edge_list(stdio.StringIO(text), directed)


def test_parse_p3():
    doc, g = parse("0 1\n1 2\n")
    assert (g.n, g.m) == (3, 2)
    assert not g.weighted
    assert doc.node_labels == ["0", "1", "2"]


def test_parse_comment_and_weight():
    doc, g = parse("# comment\na b 2.5\n")
    assert g.m == 1
    assert g.weight.tolist() == [2.5]
    assert doc.node_labels == ["a", "b"]


def test_parse_first_seen_labels_and_blank_lines():
    doc, g = parse("% header\n\nz y\n  y x 3\n\nx z\n")
    assert doc.node_labels == ["z", "y", "x"]
    assert g.edges == [(0, 1, 1.0), (1, 2, 3.0), (2, 0, 1.0)]
    assert doc.triples[0] == ("z", "y", None)


@pytest.mark.parametrize("text, lineno", [("0\n", 1), ("0 1\n1 2 3 4\n", 2),
                                          ("0 1 0\n", 1), ("0 1 -2\n", 1),
                                          ("# c\n0 1 abc\n", 2), ("0 1\n2 2\n", 2),
                                          ("0 1 nan\n", 1), ("0 1 inf\n", 1)])
def test_parse_errors_report_line(text, lineno):
    with pytest.raises(EdgeListError) as exc:
        parse(text)
    assert exc.value.lineno == lineno
    assert f"line {lineno}" in str(exc.value)


def test_parse_directed_flag():
    _, g = parse("a b\nb a\n", directed=True)
    assert g.directed and g.m == 2


def test_write_edge_list_unweighted_and_labels():
    doc, g = parse("a b\nb c\n")
    out = stdio.StringIO()
    write_edge_list(g, out, doc.node_labels)
    assert out.getvalue() == "a b\nb c\n"


def test_write_document_round_trip():
    text = "a b 0.1\nb c\nc a 7\n"
    doc, _ = parse(text)
    out = stdio.StringIO()
    write_document(doc, out)
    doc2, _ = parse(out.getvalue())
    assert doc2.triples == doc.triples


triple_lists = st.integers(2, 10).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1),
              st.floats(1e-6, 1e6, allow_nan=False)).filter(lambda t: t[0] != t[1]),
    min_size=1, max_size=25))


@settings(max_examples=80, deadline=None)
@given(triple_lists, st.booleans(), st.booleans())
def test_parse_write_identity(triples, directed, weighted):
    if not weighted:
        triples = [(u, v, 1.0) for u, v, _ in triples]
    g = build_graph(triples, directed=directed)
    out = stdio.StringIO()
    write_edge_list(g, out)
    doc, h = parse(out.getvalue(), directed)
    labels = [int(s) for s in doc.node_labels]
    assert [(labels[u], labels[v], w) for u, v, w in h.edges] == g.edges


def test_ranks_competition_style():
    assert ranks([0.5, 0.5, 0.5]).tolist() == [1, 1, 1]
    assert ranks([0.1, 0.9, 0.5, 0.9]).tolist() == [4, 1, 3, 1]
    # noise below the printed precision does not split ties
    assert ranks([0.5, 0.5 + 1e-15, 0.3]).tolist() == [1, 1, 3]


def test_write_rankings_k3(K3):
    out = stdio.StringIO()
    write_rankings(K3, edgerake(K3).scores, out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "edge_id,tail,head,weight,score,rank"
    assert [ln.split(",")[-1] for ln in lines[1:]] == ["1", "1", "1"]
    assert [ln.split(",")[0] for ln in lines[1:]] == ["0", "1", "2"]
    exact = edgerake(K3, 0.5, 1e-6).scores[0]
    assert lines[1] == f"0,0,1,1,{format(exact, '.12g')},1"


def test_write_rankings_p2(P2):
    out = stdio.StringIO()
    write_rankings(P2, [0.7], out)
    assert out.getvalue() == "edge_id,tail,head,weight,score,rank\n0,0,1,1,0.7,1\n"


def test_write_rankings_sorted_by_rank():
    g = path(5)
    out = stdio.StringIO()
    write_rankings(g, [0.2, 0.9, 0.2, 0.4], out, list("abcde"))
    rows = [ln.split(",") for ln in out.getvalue().splitlines()[1:]]
    assert [r[0] for r in rows] == ["1", "3", "0", "2"]
    assert [r[-1] for r in rows] == ["1", "2", "3", "3"]
    assert rows[0][1:3] == ["b", "c"]


def test_write_rankings_length_check(P3):
    with pytest.raises(GraphError):
        write_rankings(P3, [1.0], stdio.StringIO())


def test_rankings_round_trip(rng):
    g = build_graph([(0, 1, 2.5), (1, 2), (2, 3, 0.125)])
    scores = rng.random(3)
    out = stdio.StringIO()
    write_rankings(g, scores, out)
    triples, back = read_rankings(stdio.StringIO(out.getvalue()))
    assert triples == [("0", "1", 2.5), ("1", "2", 1.0), ("2", "3", 0.125)]
    assert np.allclose(back, scores, rtol=1e-11)


def test_read_rankings_rejects_bad_header():
    with pytest.raises(GraphError):
        read_rankings(stdio.StringIO("id,score\n0,1\n"))


def test_rankings_byte_identical(rng):
    g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)])
    outs = []
    for _ in range(2):
        buf = stdio.StringIO()
        write_rankings(g, edgerake(g).scores, buf)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]


def test_residual_rho_zero(P4):
    h = residual_graph(P4, [3.0, 1.0, 2.0], 0.0)
    assert h.edges == P4.edges


def test_residual_m10_rho03():
    g = path(11)
    scores = [5, 3, 9, 1, 7, 2, 8, 6, 4, 10]
    h = residual_graph(g, scores, 0.3)
    kept = [e for e in range(10) if g.edges[e] in h.edges]
    assert sorted(set(range(10)) - set(kept)) == [1, 3, 5]
    assert h.n == g.n


def test_residual_tie_break_lower_index_first():
    g = path(5)
    h = residual_graph(g, [1.0, 0.5, 0.5, 2.0], 0.25)
    assert h.edges == [g.edges[0], g.edges[2], g.edges[3]]
    h = residual_graph(g, [1.0, 2.0, 2.0, 0.5], 0.5, order="desc")
    assert h.edges == [g.edges[0], g.edges[3]]


def test_residual_floor_guard():
    g = path(101)
    h = residual_graph(g, np.arange(100.0), 0.29)
    assert h.m == 71


def test_residual_errors(P3):
    with pytest.raises(GraphError):
        residual_graph(P3, [1.0, 2.0], 1.5)
    with pytest.raises(GraphError):
        residual_graph(P3, [1.0], 0.5)
    with pytest.raises(GraphError):
        removal_order([1.0], "sideways")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 5), min_size=1, max_size=30),
       st.floats(0, 1), st.floats(0, 1), st.sampled_from(["asc", "desc"]))
def test_residual_nested(scores, r1, r2, order):
    g = path(len(scores) + 1)
    lo, hi = sorted((r1, r2))
    big = residual_graph(g, scores, lo, order)
    small = residual_graph(g, scores, hi, order)
    assert set(small.edges) <= set(big.edges)
    assert small.m == g.m - int(np.floor(g.m * hi + 1e-9))
