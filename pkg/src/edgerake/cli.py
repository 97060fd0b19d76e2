"""Command-line interface: ``edgerake {rank,residual,sparsify,resistance,verify}``."""

from __future__ import annotations

import argparse
import contextlib
import csv
import logging
import sys


from . import baselines, erwr, io, sparsifier, spectral, verify
from .graph import GraphError

log = logging.getLogger("edgerake")

MEASURES = ("erk", "ep", "ek", "gtom", "eb", "er", "bdrc")

MEASURE_HELP = """\
erk   EdgeRAKE (edge-wise random walk with restart)
ep    edge PageRank (undirected edges: sum of both arc scores)
ek    edge Katz (undirected edges: sum of both arc scores)
gtom  generalized topological overlap (unweighted only)
eb    edge betweenness over ORDERED node pairs (unweighted only); on
      undirected graphs this is twice the unordered-pair value
er    effective resistance (undirected only)
bdrc  biharmonic distance related centrality (undirected only)
"""


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _load(args):
    if args.input in (None, "-"):
        return io.parse_edge_list(sys.stdin, args.directed)
    return io.read_edge_list(args.input, args.directed)


def compute_scores(g, measure: str, alpha: float = erwr.DEFAULT_ALPHA,
                   epsilon: float = erwr.DEFAULT_EPSILON,
                   iters: int | None = None,
                   max_iters: int = erwr.MAX_ITERATIONS) -> erwr.CentralityVector:
    if measure == "erk":
        return erwr.edgerake(g, alpha, epsilon, iters, max_iters)
    if measure == "ep":
        return baselines.edge_pagerank(g, alpha, max_iters=iters or max_iters)
    if measure == "ek":
        return baselines.edge_katz(g, alpha, max_iters=iters or max_iters)
    if measure == "gtom":
        return baselines.gtom(g)
    if measure == "eb":
        return baselines.edge_betweenness(g)
    if measure == "er":
        return baselines.effective_resistance_centrality(g)
    if measure == "bdrc":
        return baselines.bdrc(g)
    raise GraphError(f"unknown measure {measure!r}")


def _add_io(p, output=True):
    p.add_argument("--input", "-i", help="edge list file (default: stdin)")
    if output:
        p.add_argument("--output", "-o", help="output file (default: stdout)")
    p.add_argument("--directed", action="store_true",
                   help="treat edges as directed arcs tail -> head")


def _add_measure(p, required=True):
    p.add_argument("--measure", choices=MEASURES, required=required,
                   help="centrality measure (see 'edgerake rank --help')")
    p.add_argument("--alpha", type=float, default=erwr.DEFAULT_ALPHA,
                   help="jump probability for erk/ep/ek (default 0.5)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--epsilon", type=float, default=erwr.DEFAULT_EPSILON,
                   help="erk accuracy; sets iterations (default 1e-6)")
    g.add_argument("--iters", type=int, default=None,
                   help="explicit iteration count (capped at --max-iters)")
    p.add_argument("--max-iters", type=int, default=erwr.MAX_ITERATIONS,
                   help="iteration cap (default 150)")


def cmd_rank(args) -> int:
    doc, g = _load(args)
    cv = compute_scores(g, args.measure, args.alpha, args.epsilon, args.iters,
                        args.max_iters)
    with _open_out(args.output) as out:
        io.write_rankings(g, cv.scores, out, doc.node_labels)
    return 0


def cmd_residual(args) -> int:
    doc, g = _load(args)
    if args.scores:
        with open(args.scores, encoding="utf-8", newline="") as fh:
            triples, scores = io.read_rankings(fh)
        mine = [(doc.node_labels[u], doc.node_labels[v]) for u, v, _ in g.edges]
        if [(a, b) for a, b, _ in triples] != mine:
            raise GraphError("scores file does not match the input edge list")
    elif args.measure:
        scores = compute_scores(g, args.measure, args.alpha, args.epsilon,
                                args.iters, args.max_iters).scores
    else:
        raise GraphError("residual needs --scores or --measure")
    res = io.residual_graph(g, scores, args.rho, args.order)
    with _open_out(args.output) as out:
        io.write_edge_list(res, out, doc.node_labels)
    return 0


def cmd_sparsify(args) -> int:
    doc, g = _load(args)
    sample = sparsifier.sparsify(g, args.ns, seed=args.seed,
                                 biased_weights=args.paper_weights)
    log.info("sampled %d distinct edges of %d", len(sample.support()), g.m)
    with _open_out(args.output) as out:
        io.write_edge_list(sample.graph(g), out, doc.node_labels)
    return 0


def cmd_resistance(args) -> int:
    doc, g = _load(args)
    r = spectral.effective_resistance_all(g)
    labels = doc.node_labels
    header = ["edge_id", "tail", "head", "resistance"]
    if args.bounds:
        lo, up_l, up_t = spectral.resistance_bounds(g)
        header += ["lower", "upper_lovasz", "upper_triangle"]
    with _open_out(args.output) as out:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        for e in range(g.m):
            row = [e, labels[g.tail[e]], labels[g.head[e]], format(r[e], ".12g")]
            if args.bounds:
                row += [format(x[e], ".12g") for x in (lo, up_l, up_t)]
            w.writerow(row)
    return 0


def cmd_verify(args) -> int:
    names = verify.SUITES if args.suite == "all" else (args.suite,)
    failed = False
    for name in names:
        rep = verify.run_suite(name, n=args.n, trials=args.trials, seed=args.seed)
        print(rep.summary())
        for v in rep.violations[:20]:
            print(f"  {v}")
        failed |= not rep.ok
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgerake",
        description="Edge centralities, effective resistance and sparsification.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rank", help="score and rank every edge",
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog=MEASURE_HELP)
    _add_io(p)
    _add_measure(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("residual", help="remove the top-(m*rho) edges by score")
    _add_io(p)
    p.add_argument("--scores", help="rankings CSV written by 'rank'")
    _add_measure(p, required=False)
    p.add_argument("--rho", type=float, required=True, help="fraction of edges to remove")
    p.add_argument("--order", choices=("asc", "desc"), default="asc",
                   help="asc removes the lowest scores first (default)")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("sparsify", help="resistance-sampled sparsifier")
    _add_io(p)
    p.add_argument("--ns", type=int, required=True, help="number of draws")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--paper-weights", action="store_true",
                   help="use counts/ns * r/(n-1) instead of the unbiased weights")
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("resistance", help="per-edge effective resistance")
    _add_io(p)
    p.add_argument("--bounds", action="store_true",
                   help="add degree/spectral-gap and triangle bounds")
    p.set_defaults(func=cmd_resistance)

    p = sub.add_parser("verify", help="check invariants on random graphs")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    p.add_argument("--n", type=int, default=20, help="max nodes per graph")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GraphError, baselines.ConvergenceError, OSError) as exc:
        print(f"edgerake: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
