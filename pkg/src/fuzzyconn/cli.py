"""Command-line interface.

Exit status is 0 on success, 1 on invalid input files or failed queries,
and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from fuzzyconn.connectivity import (
    Semantics,
    conn_subgraphs,
    conn_vertex,
    conn_vertex_to_subgraph,
    is_t_connected,
)
from fuzzyconn.document import GraphDocument, format_membership, load_document, serialize_document
from fuzzyconn.errors import DocumentError, FuzzyGraphError, NoCrossingEdge
from fuzzyconn.graph import FuzzySubgraph, induced_subgraph
from fuzzyconn.oracle import oracle_bridges
from fuzzyconn.reference import bundled_chd_model, published_claims
from fuzzyconn.report import jsonable, generate_report, render_json, render_text
from fuzzyconn.structural import check_theorems, fuzzy_bridges


class CommandError(Exception):
    """Input was well-formed but the command could not be carried out."""


def _load(path: str) -> GraphDocument:
    try:
        return load_document(path)
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None
    except DocumentError as exc:
        raise CommandError(f"{path}:{exc.line}: {exc.message}") from None


def _subgraph(doc: GraphDocument, ref: str) -> FuzzySubgraph:
    if not ref.startswith("@"):
        raise CommandError(f"expected a subgraph reference like @H, got {ref!r}")
    try:
        return doc.subgraphs[ref[1:]]
    except KeyError:
        raise CommandError(f"no subgraph named {ref[1:]!r}") from None


def _vertex_set(doc: GraphDocument, ref: str) -> frozenset[str]:
    if ref.startswith("@"):
        return _subgraph(doc, ref).vertex_set
    doc.graph.require(ref)
    return frozenset((ref,))


def cmd_validate(args) -> int:
    doc = _load(args.file)
    print(
        f"ok: {len(doc.graph)} vertices, {doc.graph.num_edges} edges, "
        f"{len(doc.subgraphs)} subgraphs, {len(doc.roles)} roles"
    )
    return 0


def cmd_conn(args) -> int:
    doc = _load(args.file)
    g = doc.graph
    sem = Semantics(args.semantics)
    src, dst = _vertex_set(doc, args.source), _vertex_set(doc, args.target)
    src_vertex = not args.source.startswith("@")
    dst_vertex = not args.target.startswith("@")

    if sem is Semantics.PATH_MAX_MIN and src_vertex and dst_vertex:
        result = conn_vertex(g, args.source, args.target)
    elif sem is Semantics.PATH_MAX_MIN and src_vertex:
        result = conn_vertex_to_subgraph(g, args.source, _subgraph(doc, args.target))
    else:
        try:
            result = conn_subgraphs(g, induced_subgraph(g, src), induced_subgraph(g, dst), sem)
        except NoCrossingEdge as exc:
            raise CommandError(str(exc)) from None

    print(format_membership(result.value))
    if args.witness:
        print("witness: " + ("-".join(result.witness.vertices) if result.witness else "none"))

    if sem is Semantics.PATH_MAX_MIN:
        for claim in published_claims(g):
            if claim.kind != "conn":
                continue
            sides = {frozenset(claim.source), frozenset(claim.target)}
            if sides == {src, dst}:
                computed = format_membership(result.value)
                if not claim.matches(computed):
                    print(f"note: published value for {claim.label} is {claim.published}; computed {computed}")
    return 0


def _print_bridges(bridges) -> None:
    print(f"{len(bridges)} fuzzy bridge(s)")
    for b in bridges:
        weakened = ", ".join(
            f"{w.u}-{w.v} {format_membership(w.before)}->{format_membership(w.after)}" for w in b.weakened_pairs
        )
        print(f"{b.edge[0]}-{b.edge[1]} {format_membership(b.mu)}: {weakened}")


def cmd_bridges(args) -> int:
    doc = _load(args.file)
    bridges = fuzzy_bridges(doc.graph)
    _print_bridges(bridges)
    if args.verify:
        expected = oracle_bridges(doc.graph)
        if expected != bridges:
            print("verify: MISMATCH against brute-force enumeration", file=sys.stderr)
            return 1
        print("verify: matches brute-force enumeration")
    return 0


def _pairs_from_refs(doc: GraphDocument, refs: Sequence[str] | None):
    if refs is None:
        return None
    names = []
    for ref in refs:
        _subgraph(doc, ref)
        names.append(ref[1:])
    if len(names) < 2:
        raise CommandError("--pairs needs at least two subgraphs")
    return [(a, b) for i, a in enumerate(names) for b in names[i + 1 :]]


def _emit_report(doc: GraphDocument, args, pairs=None) -> int:
    report = generate_report(
        doc.graph,
        doc.subgraphs,
        doc.roles,
        Semantics(getattr(args, "semantics", "path")),
        pairs=pairs,
        t=getattr(args, "t", None),
        tol=args.tolerance,
    )
    sys.stdout.write(render_json(report) if args.format == "json" else render_text(report))
    return 0


def cmd_report(args) -> int:
    doc = _load(args.file)
    return _emit_report(doc, args, _pairs_from_refs(doc, args.pairs))


def cmd_chd(args) -> int:
    doc = bundled_chd_model().document()
    if args.format == "fsc":
        sys.stdout.write(serialize_document(doc))
        return 0
    return _emit_report(doc, args)


def cmd_check(args) -> int:
    doc = _load(args.file)
    if len(args.pairs) != 2:
        raise CommandError("check takes exactly two subgraphs: --pairs @A @B")
    h1, h2 = (_subgraph(doc, r) for r in args.pairs)
    for c in check_theorems(doc.graph, h1, h2):
        verdict = "holds" if c.holds else "FAILS"
        details = json.dumps(jsonable(c.details))
        print(f"{c.name}: {verdict}  {details}")
    if args.t is not None:
        ok = is_t_connected(doc.graph, h1, h2, args.t, args.tolerance)
        print(f"t-connected (t={args.t}, tolerance={args.tolerance}): {'yes' if ok else 'no'}")
    return 0


def _number(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _tolerance_arg(text: str) -> float:
    x = _number(text)
    if not x >= 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return x


def _unit_arg(text: str) -> float:
    x = _number(text)
    if not 0 <= x <= 1:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1]: {text!r}")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyconn", description="Fuzzy subgraph connectivity analysis.")
    parser.add_argument(
        "--tolerance", type=_tolerance_arg, default=0.0,
        help="tolerance for t-equality comparisons (default 0: exact)",
    )
    # repeated on every subcommand so it can follow the command name too
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tolerance", type=_tolerance_arg, default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse and validate a .fsc file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("conn", parents=[common], help="connectivity between vertices and/or subgraphs")
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, metavar="V|@SUB")
    p.add_argument("--to", dest="target", required=True, metavar="V|@SUB")
    p.add_argument("--semantics", choices=[s.value for s in Semantics], default="path")
    p.add_argument("--witness", action="store_true", help="also print a path attaining the value")
    p.set_defaults(func=cmd_conn)

    p = sub.add_parser("bridges", parents=[common], help="list fuzzy bridges")
    p.add_argument("file")
    p.add_argument("--verify", action="store_true", help="cross-check by brute-force enumeration")
    p.set_defaults(func=cmd_bridges)

    p = sub.add_parser("report", parents=[common], help="full connectivity report")
    p.add_argument("file")
    p.add_argument("--pairs", nargs="+", metavar="@SUB")
    p.add_argument("--semantics", choices=[s.value for s in Semantics], default="path")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--t", type=_unit_arg, help="group the subgraphs by t-connectivity")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("chd", parents=[common], help="report on the bundled CHD risk model")
    p.add_argument("--format", choices=["text", "json", "fsc"], default="text")
    p.set_defaults(func=cmd_chd)

    p = sub.add_parser("check", parents=[common], help="evaluate connectivity theorems on a pair")
    p.add_argument("file")
    p.add_argument("--pairs", nargs="+", required=True, metavar="@SUB")
    p.add_argument("--t", type=_unit_arg, help="also test t-connectedness")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CommandError, FuzzyGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
