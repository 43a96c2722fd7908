"""Connectivity reports in text and JSON form."""

from __future__ import annotations

import json
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from fuzzyconn.connectivity import (
    ConnValue,
    PathWitness,
    Semantics,
    conn_subgraphs,
    conn_vertex_to_subgraph,
    t_equivalence_classes,
)
from fuzzyconn.document import Role, format_membership
from fuzzyconn.errors import NoCrossingEdge
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, check_disjoint
from fuzzyconn.reference import Discrepancy, discrepancies
from fuzzyconn.structural import (
    BridgeReport,
    StrengthSummary,
    TheoremCheck,
    check_theorems,
    fuzzy_bridges,
    strength_summary,
    strongest_path,
)


@dataclass(frozen=True)
class PairEntry:
    """One connectivity row: vertex-to-subgraph or subgraph-to-subgraph.

    ``source`` is a vertex name, or ``@name`` for a subgraph; ``target`` is
    always ``@name``. ``value`` is ``None`` when the semantics is undefined
    for the pair (minimum over an empty set of crossing edges).
    """

    source: str
    target: str
    semantics: Semantics
    value: ConnValue | None


@dataclass(frozen=True)
class PairCheck:
    first: str
    second: str
    check: TheoremCheck


@dataclass
class ConnectivityReport:
    vertex_count: int
    edge_count: int
    summary: StrengthSummary | None
    pairs: list[PairEntry] = field(default_factory=list)
    bridges: list[BridgeReport] = field(default_factory=list)
    strongest: PathWitness | None = None
    checks: list[PairCheck] = field(default_factory=list)
    discrepancies: list[Discrepancy] = field(default_factory=list)


def _role_subgraphs(g: FuzzyGraph, roles: Mapping[str, Role]) -> dict[str, FuzzySubgraph]:
    out = {}
    for role in Role:
        members = frozenset(v for v, r in roles.items() if r is role)
        if members and len(members) < len(g):
            out[role.value] = FuzzySubgraph(g, members)
    return out


def default_pairs(subgraphs: Mapping[str, FuzzySubgraph]) -> list[tuple[str, str]]:
    """Every disjoint pair of named subgraphs, in declaration order."""
    names = list(subgraphs)
    return [
        (a, b)
        for i, a in enumerate(names)
        for b in names[i + 1 :]
        if not subgraphs[a].vertex_set & subgraphs[b].vertex_set
    ]


def generate_report(
    g: FuzzyGraph,
    subgraphs: Mapping[str, FuzzySubgraph],
    roles: Mapping[str, Role] | None = None,
    semantics: Semantics = Semantics.PATH_MAX_MIN,
    pairs: Sequence[tuple[str, str]] | None = None,
    t: float | None = None,
    tol: float = 0.0,
) -> ConnectivityReport:
    """Analyse ``g`` and the requested subgraph pairs.

    When the document names no subgraphs, one subgraph per vertex role is
    used instead. ``pairs`` defaults to every disjoint pair. If ``t`` is
    given, the pair list's subgraphs are also grouped by t-connectivity.
    """
    subgraphs = dict(subgraphs) or _role_subgraphs(g, roles or {})
    if pairs is None:
        pairs = default_pairs(subgraphs)
    for a, b in pairs:
        check_disjoint(subgraphs[a], subgraphs[b])

    report = ConnectivityReport(
        vertex_count=len(g),
        edge_count=g.num_edges,
        summary=strength_summary(g) if g.num_edges else None,
        strongest=strongest_path(g) if g.num_edges else None,
    )

    for a, b in pairs:
        h1, h2 = subgraphs[a], subgraphs[b]
        for x in h1.vertices:
            report.pairs.append(
                PairEntry(x, f"@{b}", Semantics.PATH_MAX_MIN, conn_vertex_to_subgraph(g, x, h2))
            )
        try:
            value = conn_subgraphs(g, h1, h2, semantics)
        except NoCrossingEdge:
            value = None
        report.pairs.append(PairEntry(f"@{a}", f"@{b}", semantics, value))
        report.checks += [PairCheck(a, b, c) for c in check_theorems(g, h1, h2)]

    if t is not None:
        names = list(dict.fromkeys(n for pair in pairs for n in pair))
        eq = t_equivalence_classes(g, [subgraphs[n] for n in names], t, tol)
        details = {
            "t": t,
            "tolerance": tol,
            "classes": [[f"@{names[i]}" for i in c] for c in eq.classes],
            "violations": [[f"@{names[i]}" for i in tri] for tri in eq.violations],
        }
        report.checks.append(PairCheck("*", "*", TheoremCheck("t_equivalence", eq.transitive, details)))

    report.bridges = fuzzy_bridges(g)
    report.discrepancies = discrepancies(g)
    return report


# --- rendering


def jsonable(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, float):
        return format_membership(x)
    if isinstance(x, Mapping):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _witness_json(w: PathWitness | None):
    return None if w is None else {"path": list(w.vertices), "strength": format_membership(w.strength)}


def report_to_dict(report: ConnectivityReport) -> dict:
    s = report.summary
    return {
        "summary": {
            "vertices": report.vertex_count,
            "edges": report.edge_count,
            "r": None if s is None else format_membership(s.r),
            "d": None if s is None else format_membership(s.d),
            "kappa": None if s is None else format_membership(s.kappa),
        },
        "pairs": [
            {
                "from": p.source,
                "to": p.target,
                "semantics": p.semantics.value,
                "value": None if p.value is None else format_membership(p.value.value),
                "witness": None if p.value is None else _witness_json(p.value.witness),
            }
            for p in report.pairs
        ],
        "bridges": [
            {
                "edge": list(b.edge),
                "mu": format_membership(b.mu),
                "weakened": [
                    {"u": w.u, "v": w.v, "before": format_membership(w.before), "after": format_membership(w.after)}
                    for w in b.weakened_pairs
                ],
            }
            for b in report.bridges
        ],
        "strongest_path": _witness_json(report.strongest),
        "checks": [
            {
                "pair": [f"@{c.first}", f"@{c.second}"] if c.first != "*" else None,
                "name": c.check.name,
                "holds": c.check.holds,
                "details": jsonable(c.check.details),
            }
            for c in report.checks
        ],
        "discrepancies": [
            {"claim": d.claim, "published": d.published, "computed": d.computed}
            for d in report.discrepancies
        ],
    }


def render_json(report: ConnectivityReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def _name(ref: str) -> str:
    return ref[1:] if ref.startswith("@") else ref


def _fmt_value(c: ConnValue | None) -> str:
    if c is None:
        return "undefined (no crossing edge)"
    text = format_membership(c.value)
    if c.witness is not None:
        text += f"  via {'-'.join(c.witness.vertices)}"
    return text


def render_text(report: ConnectivityReport) -> str:
    out = [f"fuzzy graph: {report.vertex_count} vertices, {report.edge_count} edges"]
    s = report.summary
    if s is not None:
        out.append(
            f"r(G) = {format_membership(s.r)}  d(G) = {format_membership(s.d)}"
            f"  kappa(G) = {format_membership(s.kappa)}"
        )

    vertex_rows = [p for p in report.pairs if not p.source.startswith("@")]
    pair_rows = [p for p in report.pairs if p.source.startswith("@")]
    if vertex_rows:
        out += ["", "vertex-to-subgraph connectivity [path]"]
        out += [f"  CONN({p.source},{_name(p.target)}) = {_fmt_value(p.value)}" for p in vertex_rows]
    if pair_rows:
        out += ["", "subgraph connectivity"]
        out += [
            f"  CONN({_name(p.source)},{_name(p.target)}) [{p.semantics.value}] = {_fmt_value(p.value)}"
            for p in pair_rows
        ]

    out += ["", f"fuzzy bridges: {len(report.bridges)}"]
    for b in report.bridges:
        weakened = ", ".join(
            f"{w.u}-{w.v} {format_membership(w.before)}->{format_membership(w.after)}" for w in b.weakened_pairs
        )
        out.append(f"  {b.edge[0]}-{b.edge[1]} ({format_membership(b.mu)}): {weakened}")

    if report.strongest is not None:
        w = report.strongest
        out += ["", f"strongest path: {'-'.join(w.vertices)} ({format_membership(w.strength)})"]

    if report.checks:
        out += ["", "theorem checks"]
        for c in report.checks:
            where = "" if c.first == "*" else f"({c.first},{c.second}) "
            verdict = "holds" if c.check.holds else "FAILS"
            out.append(f"  {where}{c.check.name}: {verdict}  {json.dumps(jsonable(c.check.details))}")

    if report.discrepancies:
        out += ["", "discrepancies with published values"]
        out += [
            f"  {d.claim}: published {d.published}, computed {d.computed}" for d in report.discrepancies
        ]
    return "\n".join(out) + "\n"
