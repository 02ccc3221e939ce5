"""Command-line front end: ``distspec {analyze,certify,scan,extremal,nordhaus,enumerate}``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from dataclasses import asdict
from typing import Iterator, Optional

from . import spectral
from .bounds import certify_all
from .enumeration import all_connected_graphs, all_trees
from .families import FamilySpec
from .formats import (
    CertifiedGraph,
    FormatError,
    decode_graph6,
    encode_graph6,
    format_real,
    read_edge_list,
    read_graph6_lines,
    write_certificates_csv,
    write_certificates_json,
)
from .graph import Graph, GraphError, degree_summary, wiener, zagreb_m1
from .harness import CLAIMS, FILTERS, extremal, nordhaus, scan


def _add_input(p: argparse.ArgumentParser, corpus: bool = False) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", metavar="SPEC", help="e.g. kpq:2,3  broom:6,3  random:10,0.4:7")
    src.add_argument("--graph6", metavar="STR")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' header, then 'u v' lines)")
    if corpus:
        src.add_argument("--corpus", metavar="FILE", help="graph6 file, one graph per line ('-' for stdin)")
    p.add_argument("--seed", type=int, help="seed for random families without an explicit seed")
    p.add_argument("--id", dest="graph_id", help="graph identifier used in reports")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural metrics and distance spectrum of one graph")
    _add_input(p)

    p = sub.add_parser("certify", help="evaluate every bound on one graph")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("scan", help="certify every graph of a corpus")
    _add_input(p, corpus=True)
    _add_output(p)
    p.add_argument("--filter", action="append", choices=sorted(FILTERS), default=[])
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("extremal", help="verify an extremal claim by exhaustive enumeration")
    p.add_argument("claim", choices=sorted(CLAIMS))
    p.add_argument("n", type=int)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("nordhaus", help="DE(G) + DE(complement) certificate")
    _add_input(p)
    _add_output(p)

    p = sub.add_parser("enumerate", help="write all connected graphs (or trees) on n vertices as graph6")
    p.add_argument("n", type=int)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--trees", action="store_true")
    kind.add_argument("--bipartite", action="store_true")
    p.add_argument("--out", metavar="FILE")
    return parser


def _single_graph(args) -> tuple[str, Graph]:
    if args.family:
        spec = FamilySpec.parse(args.family)
        if spec.family in ("random", "tree") and spec.seed is None and args.seed is not None:
            spec = FamilySpec(spec.family, spec.params, args.seed)
        return args.graph_id or str(spec), spec.build()
    if args.graph6:
        return args.graph_id or args.graph6, decode_graph6(args.graph6)
    return args.graph_id or args.edges, read_edge_list(args.edges)


def _corpus(args) -> Iterator[tuple[str, Graph]]:
    if not getattr(args, "corpus", None):
        yield _single_graph(args)
        return
    stream = sys.stdin if args.corpus == "-" else open(args.corpus)
    with stream:
        for _, g in read_graph6_lines(stream):
            yield encode_graph6(g).decode(), g


@contextmanager
def _sink(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(records: list[CertifiedGraph], args) -> None:
    with _sink(args.out) as fh:
        if args.format == "json":
            write_certificates_json(records, fh)
        else:
            write_certificates_csv(records, fh)


def cmd_analyze(args) -> int:
    graph_id, g = _single_graph(args)
    dm = g.distances
    spec = spectral.distance_spectrum(g)
    lines = [f"graph      {graph_id}", f"n, m       {g.n}, {g.m}"]
    if g.n >= 2:
        ds = degree_summary(g)
        lines.append(f"degrees    max {ds.max1}, {ds.max2}; min {ds.min1}, {ds.min2}")
    lines.append(f"diameter   {dm.diameter}")
    bp = g.bipartition
    if bp is None:
        lines.append("bipartite  no")
    else:
        lines.append(f"bipartite  p={bp.p} q={bp.q} max_A={bp.max_a} max_B={bp.max_b} min_A={bp.min_a} min_B={bp.min_b}")
    lines += [
        f"W          {wiener(g)}",
        f"M1         {zagreb_m1(g)}",
        "D-spectrum " + ", ".join(
            format_real(v) + (f" (x{k})" if k > 1 else "") for v, k in spec.clustered()
        ),
        f"rho        {format_real(spectral.rho(g))}",
        f"DE         {format_real(spectral.distance_energy(g))}",
    ]
    sc = spectral.count_positive_d_eigenvalues(spec)
    lines.append(f"positive   {sc.count}" + (" (boundary)" if sc.boundary else ""))
    print("\n".join(lines))
    return 0


def _report_problems(summary) -> None:
    for graph_id, c in summary.violations:
        print(f"VIOLATION {graph_id} {c.bound_id}: slack {c.slack:.3e}", file=sys.stderr)
    for graph_id, c in summary.mismatches:
        print(
            f"EQUALITY MISMATCH {graph_id} {c.bound_id}: predicted {c.equality_predicted}, "
            f"observed {c.equality_observed}",
            file=sys.stderr,
        )


def cmd_certify(args) -> int:
    graph_id, g = _single_graph(args)
    record = CertifiedGraph.of(graph_id, g, certify_all(g))
    _emit([record], args)
    bad = [c for c in record.certificates if c.violated]
    for c in bad:
        print(f"VIOLATION {graph_id} {c.bound_id}: slack {c.slack:.3e}", file=sys.stderr)
    return 1 if bad else 0


def cmd_scan(args) -> int:
    summary = scan(_corpus(args), args.filter, jobs=args.jobs)
    _emit(summary.records, args)
    print(
        f"graphs {summary.graphs}  skipped {summary.skipped}  violations {len(summary.violations)}  "
        f"equality mismatches {len(summary.mismatches)}  boundary {summary.boundary}",
        file=sys.stderr,
    )
    _report_problems(summary)
    return 0 if summary.ok else 1


def cmd_extremal(args) -> int:
    report = extremal(args.claim, args.n, args.max_degree)
    payload = asdict(report)
    payload["description"] = CLAIMS[args.claim].description
    with _sink(args.out) as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    return 0 if report.claim_verified else 1


def cmd_nordhaus(args) -> int:
    graph_id, g = _single_graph(args)
    cert = nordhaus(g)
    _emit([CertifiedGraph.of(graph_id, g, [cert])], args)
    return 1 if cert.violated else 0


def cmd_enumerate(args) -> int:
    if args.trees:
        graphs = all_trees(args.n)
    else:
        graphs = all_connected_graphs(args.n, bipartite=args.bipartite)
    with _sink(args.out) as fh:
        for g in graphs:
            fh.write(encode_graph6(g).decode() + "\n")
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "certify": cmd_certify,
    "scan": cmd_scan,
    "extremal": cmd_extremal,
    "nordhaus": cmd_nordhaus,
    "enumerate": cmd_enumerate,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (FormatError, GraphError, ValueError, OSError) as exc:
        print(f"distspec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
