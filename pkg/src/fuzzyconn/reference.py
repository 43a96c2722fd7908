"""Bundled example graphs, the CHD risk model, and their published values.

Published values are recorded verbatim as decimal strings so a report can
show where recomputation disagrees with them.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from fuzzyconn.connectivity import conn_vertex_to_subgraph, conn_subgraphs, path_strength
from fuzzyconn.document import GraphDocument, Role, format_membership
from fuzzyconn.errors import NotAPath
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, induced_subgraph
from fuzzyconn.structural import strength_summary


def sample_graph() -> FuzzyGraph:
    """Five-vertex graph with a strong a-d edge and a pendant e."""
    return FuzzyGraph.from_edges(
        [
            ("a", "b", 0.4),
            ("b", "c", 0.15),
            ("b", "d", 0.1),
            ("c", "d", 0.1),
            ("a", "d", 0.9),
            ("e", "d", 0.3),
        ],
        vertices="abcde",
    )


def nontransitive_graph() -> FuzzyGraph:
    """Seven-vertex graph on which subgraph connectivity is not transitive."""
    return FuzzyGraph.from_edges(
        [
            ("a", "b", 0.1),
            ("b", "c", 0.3),
            ("c", "d", 0.25),
            ("d", "e", 0.9),
            ("c", "f", 0.11),
            ("a", "c", 0.9),
            ("a", "g", 0.8),
        ],
        vertices="abcdefg",
    )


CHD_ROLES: dict[str, Role] = {
    **{f"a{i}": Role.UNCONTROLLABLE for i in range(1, 4)},
    **{f"c{i}": Role.INDICATOR for i in range(1, 7)},
    **{f"d{i}": Role.CONTROLLABLE for i in range(1, 5)},
}

CHD_LABELS = {
    "a1": "Age", "a2": "Gender", "a3": "Family history",
    "c1": "ECG", "c2": "Stress test", "c3": "Echo", "c4": "Holter", "c5": "Hematology", "c6": "CT",
    "d1": "Diet", "d2": "Sleep", "d3": "Activity", "d4": "Smoking",
}

CHD_EDGES = [
    ("a1", "c2", 0.6),
    ("a2", "c3", 0.4),
    ("a3", "c5", 0.7),
    ("c1", "d1", 0.8),
    ("c3", "d2", 0.5),
    ("c4", "d3", 0.9),
    ("c6", "d4", 0.3),
    ("a1", "d3", 0.45),
    ("a2", "d4", 0.55),
]

# subgraph name -> role it collects
CHD_GROUPS = {"H_A": Role.UNCONTROLLABLE, "H_C": Role.INDICATOR, "H_D": Role.CONTROLLABLE}


@dataclass(frozen=True)
class ChdModel:
    graph: FuzzyGraph
    roles: dict[str, Role]
    subgraphs: dict[str, FuzzySubgraph]

    def document(self) -> GraphDocument:
        return GraphDocument(self.graph, dict(self.subgraphs), dict(self.roles))


def bundled_chd_model() -> ChdModel:
    """The coronary-heart-disease risk graph; every vertex has membership 1."""
    g = FuzzyGraph.from_edges(CHD_EDGES, vertices=CHD_ROLES)
    subgraphs = {
        name: induced_subgraph(g, [v for v, r in CHD_ROLES.items() if r is role])
        for name, role in CHD_GROUPS.items()
    }
    return ChdModel(g, dict(CHD_ROLES), subgraphs)


@dataclass(frozen=True)
class PublishedClaim:
    """A value stated for a bundled graph.

    ``kind`` is ``"conn"`` (path connectivity from ``source`` to ``target``),
    ``"r"``, ``"d"``, ``"kappa"``, or ``"route"`` (strength of the vertex
    sequence ``source``).
    """

    label: str
    kind: str
    published: str
    source: tuple[str, ...] = ()
    target: tuple[str, ...] = ()

    def evaluate(self, g: FuzzyGraph) -> str:
        if self.kind == "conn":
            if len(self.source) == 1:
                c = conn_vertex_to_subgraph(g, self.source[0], induced_subgraph(g, self.target))
            else:
                h1 = induced_subgraph(g, self.source)
                h2 = induced_subgraph(g, self.target)
                c = conn_subgraphs(g, h1, h2)
            return format_membership(c.value)
        if self.kind in ("r", "d", "kappa"):
            return format_membership(getattr(strength_summary(g), self.kind))
        if self.kind == "route":
            try:
                return format_membership(path_strength(g, self.source))
            except NotAPath as exc:
                return f"not a path ({exc})"
        raise ValueError(f"unknown claim kind {self.kind!r}")

    def matches(self, computed: str) -> bool:
        try:
            return Decimal(computed) == Decimal(self.published)
        except ArithmeticError:
            return False


SAMPLE_CLAIMS = (
    PublishedClaim("CONN(a,H)", "conn", "0.9", ("a",), ("b", "c", "d")),
    PublishedClaim("CONN(e,H)", "conn", "0.4", ("e",), ("b", "c", "d")),
    PublishedClaim("CONN(H1,H2)", "conn", "0.4", ("a", "d"), ("b", "c")),
)

NONTRANSITIVE_CLAIMS = (
    PublishedClaim("CONN(H1,H2)", "conn", "0.25", ("a", "b"), ("d", "e")),
    PublishedClaim("CONN(H2,H3)", "conn", "0.25", ("d", "e"), ("f", "g")),
    PublishedClaim("CONN(H1,H3)", "conn", "0.8", ("a", "b"), ("f", "g")),
)

_A = ("a1", "a2", "a3")
_D = ("d1", "d2", "d3", "d4")

CHD_CLAIMS = (
    PublishedClaim("CONN(a2,H_D)", "conn", "0.55", ("a2",), _D),
    PublishedClaim("CONN(H_A,H_D)", "conn", "0.6", _A, _D),
    PublishedClaim("route a1-c2-d1", "route", "0.6", ("a1", "c2", "d1")),
    PublishedClaim("r(G)", "r", "0.3"),
    PublishedClaim("d(G)", "d", "0.9"),
    PublishedClaim("kappa(G)", "kappa", "0.9"),
)


def published_claims(g: FuzzyGraph) -> tuple[PublishedClaim, ...]:
    """Claims recorded for ``g`` if it is one of the bundled graphs."""
    if g == sample_graph():
        return SAMPLE_CLAIMS
    if g == nontransitive_graph():
        return NONTRANSITIVE_CLAIMS
    if g == bundled_chd_model().graph:
        return CHD_CLAIMS
    return ()


@dataclass(frozen=True)
class Discrepancy:
    claim: str
    published: str
    computed: str


def discrepancies(g: FuzzyGraph) -> list[Discrepancy]:
    out = []
    for claim in published_claims(g):
        computed = claim.evaluate(g)
        if not claim.matches(computed):
            out.append(Discrepancy(claim.label, claim.published, computed))
    return out
