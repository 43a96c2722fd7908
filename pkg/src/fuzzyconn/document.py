"""The ``.fsc`` line-oriented graph format.

::

    fsc 1
    # vertices, edges, named subgraphs, optional vertex roles
    v a 1.0
    v b 1.0
    e a b 0.4
    s H b
    p a uncontrollable

Tokens are whitespace separated; a token starting with ``#`` comments out the
rest of the line. Memberships are decimal literals. Declarations may appear
in any order after the header.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from pathlib import Path

from fuzzyconn.errors import DocumentSemanticError, DocumentSyntaxError, FuzzyGraphError
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, check_edge, check_vertex, induced_subgraph

HEADER = ("fsc", "1")


class Role(enum.Enum):
    UNCONTROLLABLE = "uncontrollable"
    INDICATOR = "indicator"
    CONTROLLABLE = "controllable"


@dataclass
class GraphDocument:
    graph: FuzzyGraph
    subgraphs: dict[str, FuzzySubgraph] = field(default_factory=dict)
    roles: dict[str, Role] = field(default_factory=dict)


def format_membership(x: float) -> str:
    """Shortest decimal string that round-trips to ``x``."""
    return repr(float(x))


def _parse_membership(token: str, line: int) -> float:
    try:
        d = Decimal(token)
    except InvalidOperation:
        raise DocumentSyntaxError(line, f"not a decimal number: {token!r}") from None
    if not d.is_finite():
        raise DocumentSyntaxError(line, f"not a decimal number: {token!r}")
    return float(d)


def _tokenize(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = []
        for tok in raw.split():
            if tok.startswith("#"):
                break
            tokens.append(tok)
        if tokens:
            yield lineno, tokens


def parse_document(text: str) -> GraphDocument:
    """Parse ``.fsc`` text into a validated graph, subgraphs and roles.

    Raises :class:`DocumentSyntaxError` for malformed lines and
    :class:`DocumentSemanticError` when a well-formed declaration violates a
    graph invariant. Both carry the offending line number.
    """
    lines = list(_tokenize(text))
    if not lines:
        raise DocumentSyntaxError(1, "missing 'fsc 1' header")
    lineno, tokens = lines[0]
    if tuple(tokens) != HEADER:
        raise DocumentSyntaxError(lineno, f"expected header 'fsc 1', got {' '.join(tokens)!r}")

    vertex_lines, edge_lines, sub_lines, role_lines = [], [], [], []
    for lineno, tokens in lines[1:]:
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            if len(args) != 2:
                raise DocumentSyntaxError(lineno, "expected 'v <name> <sigma>'")
            vertex_lines.append((lineno, args[0], _parse_membership(args[1], lineno)))
        elif kind == "e":
            if len(args) != 3:
                raise DocumentSyntaxError(lineno, "expected 'e <u> <v> <mu>'")
            edge_lines.append((lineno, args[0], args[1], _parse_membership(args[2], lineno)))
        elif kind == "s":
            if len(args) < 2:
                raise DocumentSyntaxError(lineno, "expected 's <name> <vertex> ...'")
            sub_lines.append((lineno, args[0], args[1:]))
        elif kind == "p":
            if len(args) != 2:
                raise DocumentSyntaxError(lineno, "expected 'p <vertex> <role>'")
            role_lines.append((lineno, args[0], args[1]))
        else:
            raise DocumentSyntaxError(lineno, f"unknown directive {kind!r}")

    if not vertex_lines:
        raise DocumentSemanticError(lineno, "document declares no vertices")

    sigma: dict[str, float] = {}
    mu: dict = {}
    try:
        for lineno, name, s in vertex_lines:
            name, s = check_vertex(name, s, sigma)
            sigma[name] = s
        for lineno, u, v, m in edge_lines:
            key, m = check_edge(u, v, m, sigma, mu)
            mu[key] = m
        graph = FuzzyGraph(sigma.items(), ((u, v, m) for (u, v), m in mu.items()))

        subgraphs: dict[str, FuzzySubgraph] = {}
        for lineno, name, members in sub_lines:
            if name in subgraphs:
                raise FuzzyGraphError(f"subgraph {name!r} declared twice")
            if len(set(members)) != len(members):
                raise FuzzyGraphError(f"subgraph {name!r} lists a vertex twice")
            subgraphs[name] = induced_subgraph(graph, members)

        roles: dict[str, Role] = {}
        for lineno, name, role in role_lines:
            graph.require(name)
            if name in roles:
                raise FuzzyGraphError(f"role of {name!r} declared twice")
            try:
                roles[name] = Role(role)
            except ValueError:
                choices = ", ".join(r.value for r in Role)
                raise FuzzyGraphError(f"unknown role {role!r} (expected one of {choices})") from None
    except FuzzyGraphError as exc:
        raise DocumentSemanticError(lineno, f"{type(exc).__name__}: {exc}") from exc

    return GraphDocument(graph, subgraphs, roles)


def load_document(path: str | Path) -> GraphDocument:
    return parse_document(Path(path).read_text(encoding="utf-8"))


def serialize_document(doc: GraphDocument) -> str:
    g = doc.graph
    out = [" ".join(HEADER)]
    out += [f"v {v} {format_membership(s)}" for v, s in g.sigma_map.items()]
    out += [f"e {u} {v} {format_membership(m)}" for u, v, m in g.edges()]
    out += [f"s {name} {' '.join(h.vertices)}" for name, h in doc.subgraphs.items()]
    out += [f"p {v} {r.value}" for v, r in doc.roles.items()]
    return "\n".join(out) + "\n"
