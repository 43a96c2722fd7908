"""Exception hierarchy.

Every error raised on bad input derives from :class:`FuzzyGraphError`, which is
itself a :class:`ValueError` so callers that only care about "bad input" can
catch the builtin.
"""

from __future__ import annotations


class FuzzyGraphError(ValueError):
    """Base class for all library errors."""


# --- construction / validation


class InvalidVertexName(FuzzyGraphError):
    pass


class DuplicateVertex(FuzzyGraphError):
    pass


class UnknownEndpoint(FuzzyGraphError):
    pass


class SelfLoop(FuzzyGraphError):
    pass


class MembershipOutOfRange(FuzzyGraphError):
    pass


class ZeroMembershipEdge(MembershipOutOfRange):
    """An edge with membership 0 was given; absent edges are simply omitted."""


class EdgeExceedsVertexCap(FuzzyGraphError):
    pass


class DuplicateEdge(FuzzyGraphError):
    pass


# --- subgraphs / queries


class UnknownVertex(FuzzyGraphError):
    pass


class EmptyVertexSet(FuzzyGraphError):
    pass


class NotProper(FuzzyGraphError):
    pass


class NotDisjoint(FuzzyGraphError):
    pass


class NotAPath(FuzzyGraphError):
    pass


class VertexInsideSubgraph(FuzzyGraphError):
    pass


class VertexNotInSubgraph(FuzzyGraphError):
    pass


class NoCrossingEdge(FuzzyGraphError):
    pass


# --- structural


class EdgelessGraph(FuzzyGraphError):
    pass


class NotABridge(FuzzyGraphError):
    pass


class NotAFuzzyTree(FuzzyGraphError):
    pass


# --- oracle


class BudgetExceeded(FuzzyGraphError):
    pass


# --- documents


class DocumentError(FuzzyGraphError):
    """A problem in a ``.fsc`` document, tagged with its 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class DocumentSyntaxError(DocumentError):
    pass


class DocumentSemanticError(DocumentError):
    pass
