"""Fuzzy graph data model.

A fuzzy graph is a vertex membership map ``sigma`` plus an undirected edge
membership map ``mu`` with ``0 < mu(u, v) <= min(sigma(u), sigma(v))``.
Absent edges have membership 0 and are never stored.

Both :class:`FuzzyGraph` and :class:`FuzzySubgraph` are immutable.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from numbers import Real
from types import MappingProxyType

from fuzzyconn.errors import (
    DuplicateEdge,
    DuplicateVertex,
    EdgeExceedsVertexCap,
    EmptyVertexSet,
    InvalidVertexName,
    MembershipOutOfRange,
    NotDisjoint,
    NotProper,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
    ZeroMembershipEdge,
)

EdgeKey = tuple[str, str]


def edge_key(u: str, v: str) -> EdgeKey:
    """Canonical (sorted) key for the undirected edge ``uv``."""
    return (u, v) if u <= v else (v, u)


def check_vertex_name(name: object) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidVertexName(f"vertex name must be a non-empty string, got {name!r}")
    if any(ch.isspace() for ch in name):
        raise InvalidVertexName(f"vertex name {name!r} contains whitespace")
    # '@' marks subgraph references on the command line, '#' starts a comment
    if name[0] in "@#":
        raise InvalidVertexName(f"vertex name {name!r} may not start with {name[0]!r}")
    return name


def check_membership(value: object, what: str = "membership") -> float:
    if isinstance(value, bool) or not isinstance(value, Real):
        raise MembershipOutOfRange(f"{what} must be a real number, got {value!r}")
    x = float(value)
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise MembershipOutOfRange(f"{what} {value!r} is outside [0, 1]")
    return x


def check_vertex(name: object, sigma: object, existing: Mapping[str, float]) -> tuple[str, float]:
    """Validate one vertex entry against the vertices accepted so far."""
    name = check_vertex_name(name)
    if name in existing:
        raise DuplicateVertex(f"vertex {name!r} declared twice")
    return name, check_membership(sigma, f"membership of vertex {name!r}")


def check_edge(
    u: object,
    v: object,
    mu: object,
    sigma: Mapping[str, float],
    existing: Mapping[EdgeKey, float],
) -> tuple[EdgeKey, float]:
    """Validate one edge entry; returns its canonical key and membership."""
    for end in (u, v):
        if not isinstance(end, str) or end not in sigma:
            raise UnknownEndpoint(f"edge endpoint {end!r} is not a vertex")
    if u == v:
        raise SelfLoop(f"self-loop on {u!r}")
    key = edge_key(u, v)
    x = check_membership(mu, f"membership of edge {u}-{v}")
    if x == 0.0:
        raise ZeroMembershipEdge(f"edge {u}-{v} has membership 0; omit it instead")
    if key in existing:
        raise DuplicateEdge(f"edge {u}-{v} declared twice")
    cap = min(sigma[u], sigma[v])
    if x > cap:
        raise EdgeExceedsVertexCap(
            f"edge {u}-{v} membership {x!r} exceeds min(sigma({u}), sigma({v})) = {cap!r}"
        )
    return key, x


class FuzzyGraph:
    """An undirected fuzzy graph ``G = (sigma, mu)``.

    >>> g = FuzzyGraph([("a", 1.0), ("b", 0.5)], [("a", "b", 0.4)])
    >>> g.mu("b", "a")
    0.4
    >>> g.mu("a", "a"), g.sigma("b")
    (0.0, 0.5)
    """

    __slots__ = ("_sigma", "_mu", "_adj", "_hash")

    def __init__(
        self,
        vertices: Iterable[tuple[str, float]],
        edges: Iterable[tuple[str, str, float]] = (),
    ) -> None:
        sigma: dict[str, float] = {}
        for name, s in vertices:
            name, s = check_vertex(name, s, sigma)
            sigma[name] = s
        mu: dict[EdgeKey, float] = {}
        adj: dict[str, dict[str, float]] = {v: {} for v in sigma}
        for u, v, m in edges:
            key, m = check_edge(u, v, m, sigma, mu)
            mu[key] = m
            adj[u][v] = m
            adj[v][u] = m
        self._sigma = MappingProxyType(sigma)
        self._mu = MappingProxyType(mu)
        self._adj = MappingProxyType({v: MappingProxyType(nb) for v, nb in adj.items()})
        self._hash: int | None = None

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str, float]],
        vertices: Iterable[str] = (),
        sigma: float = 1.0,
    ) -> FuzzyGraph:
        """Graph whose vertices all carry membership ``sigma``.

        Vertices are taken from ``vertices`` first, then from edge endpoints
        in order of first appearance.
        """
        edges = list(edges)
        names = dict.fromkeys(vertices)
        for u, v, _ in edges:
            names.setdefault(u)
            names.setdefault(v)
        return cls(((n, sigma) for n in names), edges)

    # accessors

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self._sigma)

    @property
    def sigma_map(self) -> Mapping[str, float]:
        return self._sigma

    @property
    def mu_map(self) -> Mapping[EdgeKey, float]:
        return self._mu

    def edges(self) -> list[tuple[str, str, float]]:
        """All edges as ``(u, v, mu)`` with ``u < v``, sorted by endpoints."""
        return [(u, v, m) for (u, v), m in sorted(self._mu.items())]

    def sigma(self, v: str) -> float:
        try:
            return self._sigma[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def mu(self, u: str, v: str) -> float:
        self.require(u, v)
        return self._mu.get(edge_key(u, v), 0.0)

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._mu

    def neighbors(self, v: str) -> Mapping[str, float]:
        """Adjacent vertices of ``v`` mapped to edge memberships."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def require(self, *vs: str) -> None:
        for v in vs:
            if v not in self._sigma:
                raise UnknownVertex(f"unknown vertex {v!r}")

    def __contains__(self, v: object) -> bool:
        return v in self._sigma

    def __iter__(self) -> Iterator[str]:
        return iter(self._sigma)

    def __len__(self) -> int:
        return len(self._sigma)

    @property
    def num_edges(self) -> int:
        return len(self._mu)

    # derived graphs

    def without_edge(self, u: str, v: str) -> FuzzyGraph:
        key = edge_key(u, v)
        if key not in self._mu:
            raise UnknownEndpoint(f"{u}-{v} is not an edge")
        return FuzzyGraph(
            self._sigma.items(),
            ((a, b, m) for (a, b), m in self._mu.items() if (a, b) != key),
        )

    def with_edge(self, u: str, v: str, m: float) -> FuzzyGraph:
        return FuzzyGraph(
            self._sigma.items(),
            [*((a, b, x) for (a, b), x in self._mu.items()), (u, v, m)],
        )

    # equality is structural and order-insensitive

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FuzzyGraph):
            return NotImplemented
        return dict(self._sigma) == dict(other._sigma) and dict(self._mu) == dict(other._mu)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._sigma.items()), frozenset(self._mu.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"FuzzyGraph(|V|={len(self)}, |E|={self.num_edges})"


def build_graph(
    vertices: Iterable[tuple[str, float]],
    edges: Iterable[tuple[str, str, float]],
) -> FuzzyGraph:
    """Build and validate a fuzzy graph from vertex and edge lists."""
    return FuzzyGraph(vertices, edges)


@dataclass(frozen=True)
class FuzzySubgraph:
    """A proper induced fuzzy subgraph, identified by its vertex set.

    Edges are derived from the host on demand and never stored.
    """

    host: FuzzyGraph = field(repr=False)
    vertex_set: frozenset[str]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(sorted(self.vertex_set))

    def edges(self) -> list[tuple[str, str, float]]:
        return [
            (u, v, m)
            for u, v, m in self.host.edges()
            if u in self.vertex_set and v in self.vertex_set
        ]

    def __contains__(self, v: object) -> bool:
        return v in self.vertex_set

    def __len__(self) -> int:
        return len(self.vertex_set)


def _as_vertex_set(vs: Iterable[str]) -> frozenset[str]:
    if isinstance(vs, str):
        raise TypeError("vertex set must be an iterable of names, not a single string")
    return frozenset(vs)


def induced_subgraph(g: FuzzyGraph, vs: Iterable[str]) -> FuzzySubgraph:
    """The proper fuzzy subgraph of ``g`` induced by ``vs``."""
    s = _as_vertex_set(vs)
    if not s:
        raise EmptyVertexSet("induced subgraph needs at least one vertex")
    for v in sorted(s):
        if v not in g:
            raise UnknownVertex(f"unknown vertex {v!r}")
    if len(s) == len(g):
        raise NotProper("vertex set covers the whole graph; subgraph must be proper")
    return FuzzySubgraph(g, s)


def check_disjoint(h1: FuzzySubgraph, h2: FuzzySubgraph) -> None:
    if h1.host != h2.host:
        raise NotDisjoint("subgraphs belong to different host graphs")
    common = h1.vertex_set & h2.vertex_set
    if common:
        raise NotDisjoint(f"subgraphs share vertices {sorted(common)}")


def disjoint_pair(
    g: FuzzyGraph, vs1: Iterable[str], vs2: Iterable[str]
) -> tuple[FuzzySubgraph, FuzzySubgraph]:
    h1 = induced_subgraph(g, vs1)
    h2 = induced_subgraph(g, vs2)
    check_disjoint(h1, h2)
    return h1, h2
