"""Edge-list and ranking-CSV serialisation, plus the edge-removal protocol."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import IO, Iterable

import numpy as np

from .graph import Graph, GraphError, from_arrays


class EdgeListError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class EdgeListDocument:
    node_labels: list[str]
    triples: list[tuple[str, str, float | None]]
    directed: bool = False
    index: dict[str, int] = field(default_factory=dict, repr=False)

    def to_graph(self) -> Graph:
        tails = [self.index[a] for a, _, _ in self.triples]
        heads = [self.index[b] for _, b, _ in self.triples]
        weights = [1.0 if w is None else w for _, _, w in self.triples]
        return from_arrays(tails, heads, weights, n=len(self.node_labels),
                           directed=self.directed)


COMMENT_PREFIXES = ("#", "%")


def parse_edge_list(stream: Iterable[str], directed: bool = False
                    ) -> tuple[EdgeListDocument, Graph]:
    """Read ``<tail> <head> [<weight>]`` lines.

    Labels are densified to ``0..n-1`` in first-seen order. Blank lines and
    lines starting with ``#`` or ``%`` are skipped.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    triples = []
    for lineno, line in enumerate(stream, start=1):
        s = line.strip()
        if not s or s.startswith(COMMENT_PREFIXES):
            continue
        tok = s.split()
        if len(tok) not in (2, 3):
            raise EdgeListError(lineno, f"expected '<tail> <head> [<weight>]', got {s!r}")
        a, b = tok[0], tok[1]
        w = None
        if len(tok) == 3:
            try:
                w = float(tok[2])
            except ValueError:
                raise EdgeListError(lineno, f"bad weight {tok[2]!r}") from None
            if not (w > 0 and math.isfinite(w)):
                raise EdgeListError(lineno, f"weight must be positive, got {tok[2]}")
        if a == b:
            raise EdgeListError(lineno, f"self-loop on {a!r}")
        for lab in (a, b):
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
        triples.append((a, b, w))
    doc = EdgeListDocument(labels, triples, directed, index)
    return doc, doc.to_graph()


def read_edge_list(path, directed: bool = False) -> tuple[EdgeListDocument, Graph]:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh, directed)


def _labels(g: Graph, labels):
    return [str(i) for i in range(g.n)] if labels is None else labels


def _fmt_weight(w: float) -> str:
    return repr(float(w))


def write_edge_list(g: Graph, sink: IO[str], labels=None) -> None:
    """Write ``g`` as an edge list; weights are emitted only if ``g`` is
    weighted, in a form that parses back to the same float."""
    labels = _labels(g, labels)
    weighted = g.weighted
    for u, v, w in zip(g.tail.tolist(), g.head.tolist(), g.weight.tolist()):
        if weighted:
            sink.write(f"{labels[u]} {labels[v]} {_fmt_weight(w)}\n")
        else:
            sink.write(f"{labels[u]} {labels[v]}\n")


def write_document(doc: EdgeListDocument, sink: IO[str]) -> None:
    for a, b, w in doc.triples:
        sink.write(f"{a} {b}\n" if w is None else f"{a} {b} {_fmt_weight(w)}\n")


def _printed(scores) -> np.ndarray:
    return np.array([float(format(s, SCORE_FORMAT)) for s in np.asarray(scores)])


RANKING_HEADER = ["edge_id", "tail", "head", "weight", "score", "rank"]
SCORE_FORMAT = ".12g"


def ranks(scores) -> np.ndarray:
    """Competition ranks, 1 = highest score, ties share the smaller rank.

    Scores are compared after rounding to the 12 significant digits that
    are written out, so floating-point noise below the printed precision
    does not break ties.
    """
    keys = _printed(scores)
    order = np.lexsort((np.arange(len(keys)), -keys))
    r = np.empty(len(keys), dtype=np.int64)
    prev = None
    for pos, e in enumerate(order):
        if prev is None or keys[e] != keys[prev]:
            current = pos + 1
        r[e] = current
        prev = e
    return r


def write_rankings(g: Graph, scores, sink: IO[str], labels=None) -> None:
    """CSV ``edge_id,tail,head,weight,score,rank`` sorted by rank, then id."""
    scores = np.asarray(scores, dtype=np.float64)
    if scores.shape != (g.m,):
        raise GraphError(f"expected {g.m} scores, got {scores.shape}")
    labels = _labels(g, labels)
    rk = ranks(scores)
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(RANKING_HEADER)
    for e in np.lexsort((np.arange(g.m), rk)):
        writer.writerow([int(e), labels[g.tail[e]], labels[g.head[e]],
                         format(g.weight[e], SCORE_FORMAT),
                         format(scores[e], SCORE_FORMAT), int(rk[e])])


def read_rankings(stream: IO[str]):
    """Parse a rankings CSV back into ``(triples, scores)`` in edge-id order."""
    reader = csv.DictReader(stream)
    if reader.fieldnames != RANKING_HEADER:
        raise GraphError(f"unexpected rankings header {reader.fieldnames}")
    rows = sorted(reader, key=lambda r: int(r["edge_id"]))
    ids = [int(r["edge_id"]) for r in rows]
    if ids != list(range(len(rows))):
        raise GraphError("edge ids in rankings file are not 0..m-1")
    triples = [(r["tail"], r["head"], float(r["weight"])) for r in rows]
    scores = np.array([float(r["score"]) for r in rows])
    return triples, scores


def removal_order(scores, order: str = "asc") -> np.ndarray:
    """Edge ids in removal order; ties (at printed precision) broken by
    ascending edge id."""
    scores = _printed(np.asarray(scores, dtype=np.float64))
    ids = np.arange(len(scores))
    if order == "asc":
        return np.lexsort((ids, scores))
    if order == "desc":
        return np.lexsort((ids, -scores))
    raise GraphError(f"order must be 'asc' or 'desc', got {order!r}")


def residual_graph(g: Graph, scores, rho: float, order: str = "asc") -> Graph:
    """Drop the first ``floor(m * rho)`` edges in ``order`` of score.

    Remaining edges keep their original order and the node set is unchanged.
    """
    if not 0.0 <= rho <= 1.0:
        raise GraphError(f"rho must lie in [0, 1], got {rho!r}")
    scores = np.asarray(scores, dtype=np.float64)
    if scores.shape != (g.m,):
        raise GraphError(f"expected {g.m} scores, got {scores.shape}")
    # tolerate products like 100 * 0.29 = 28.999999999999996
    k = min(g.m, math.floor(g.m * rho + 1e-9))
    keep = np.ones(g.m, dtype=bool)
    keep[removal_order(scores, order)[:k]] = False
    return g.subgraph(keep)
