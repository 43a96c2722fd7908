"""Max-min connectivity between vertices and fuzzy subgraphs.

Path strength is the minimum edge membership along a path and connectivity is
the maximum strength over all connecting paths (a widest-path problem).

Witness paths are chosen deterministically: among all paths attaining the
optimal strength, the one with the fewest hops, and among those the
lexicographically smallest vertex sequence.
"""

from __future__ import annotations

import enum
import heapq
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np

from fuzzyconn.errors import (
    NoCrossingEdge,
    NotAPath,
    UnknownVertex,
    VertexInsideSubgraph,
)
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, check_disjoint

# strength of the edgeless single-vertex path
UNIT = 1.0


class Semantics(enum.Enum):
    """How connectivity between two subgraphs is measured."""

    PATH_MAX_MIN = "path"
    CROSS_EDGE_MAX = "xmax"
    CROSS_EDGE_MIN = "xmin"


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[str, ...]
    strength: float

    @property
    def hops(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class ConnValue:
    """A connectivity value and a path achieving it.

    ``witness`` is ``None`` exactly when nothing connects the two sides
    (value 0).
    """

    value: float
    witness: PathWitness | None = None


def path_strength(g: FuzzyGraph, vertices: Sequence[str]) -> float:
    """Minimum edge membership along a simple path; 1.0 for a single vertex."""
    if not vertices:
        raise NotAPath("a path needs at least one vertex")
    g.require(*vertices)
    if len(set(vertices)) != len(vertices):
        raise NotAPath(f"path {tuple(vertices)} repeats a vertex")
    strength = UNIT
    for a, b in zip(vertices, vertices[1:]):
        m = g.neighbors(a).get(b)
        if m is None:
            raise NotAPath(f"{a}-{b} is not an edge")
        strength = min(strength, m)
    return strength


def _widest(g: FuzzyGraph, sources: Iterable[str], targets: frozenset[str]) -> float:
    """Best bottleneck from any source to any target (0.0 if unreachable).

    Dijkstra-style search on (max, min); vertices settle in non-increasing
    order of bottleneck, so the first settled target is optimal.
    """
    best: dict[str, float] = {}
    heap = [(-UNIT, s) for s in sources]
    heapq.heapify(heap)
    settled: set[str] = set()
    while heap:
        neg, x = heapq.heappop(heap)
        if x in settled:
            continue
        if x in targets:
            return -neg
        settled.add(x)
        for y, m in g.neighbors(x).items():
            if y in settled:
                continue
            b = min(-neg, m)
            if b > best.get(y, 0.0):
                best[y] = b
                heapq.heappush(heap, (-b, y))
    return 0.0


def _select_witness(
    g: FuzzyGraph, sources: frozenset[str], targets: frozenset[str], value: float
) -> tuple[str, ...]:
    """Fewest-hop, lexicographically smallest source-to-target path using only
    edges with membership >= ``value``.

    Every such path has strength exactly ``value`` when ``value`` is optimal.
    """
    dist = {t: 0 for t in targets}
    queue = deque(targets)
    while queue:
        x = queue.popleft()
        for y, m in g.neighbors(x).items():
            if m >= value and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    reachable = [s for s in sources if s in dist]
    d0 = min(dist[s] for s in reachable)
    cur = min(s for s in reachable if dist[s] == d0)
    path = [cur]
    while dist[cur] > 0:
        cur = min(
            y
            for y, m in g.neighbors(cur).items()
            if m >= value and dist.get(y) == dist[cur] - 1
        )
        path.append(cur)
    return tuple(path)


def _conn_sets(g: FuzzyGraph, sources: frozenset[str], targets: frozenset[str]) -> ConnValue:
    if sources & targets:
        v = min(sources & targets)
        return ConnValue(UNIT, PathWitness((v,), UNIT))
    value = _widest(g, sources, targets)
    if value == 0.0:
        return ConnValue(0.0, None)
    return ConnValue(value, PathWitness(_select_witness(g, sources, targets, value), value))


def conn_vertex(g: FuzzyGraph, u: str, v: str) -> ConnValue:
    """Strength of connectedness between two vertices, with a witness path.

    >>> g = FuzzyGraph.from_edges([("a", "b", 0.2), ("b", "c", 0.8)])
    >>> conn_vertex(g, "a", "c")
    ConnValue(value=0.2, witness=PathWitness(vertices=('a', 'b', 'c'), strength=0.2))
    """
    g.require(u, v)
    return _conn_sets(g, frozenset((u,)), frozenset((v,)))


def _check_member(g: FuzzyGraph, h: FuzzySubgraph) -> None:
    if h.host != g:
        raise UnknownVertex("subgraph is not a subgraph of this graph")


def conn_vertex_to_subgraph(g: FuzzyGraph, x: str, h: FuzzySubgraph) -> ConnValue:
    """Maximum connectivity between ``x`` and any vertex of ``h``.

    Paths range over all of ``g`` and may pass through vertices of ``h``.
    """
    g.require(x)
    _check_member(g, h)
    if x in h:
        raise VertexInsideSubgraph(f"vertex {x!r} belongs to the subgraph")
    return _conn_sets(g, frozenset((x,)), h.vertex_set)


def _crossing_edges(g: FuzzyGraph, h1: FuzzySubgraph, h2: FuzzySubgraph) -> list[tuple[float, str, str]]:
    return [
        (m, x, y)
        for x in sorted(h1.vertex_set)
        for y, m in g.neighbors(x).items()
        if y in h2.vertex_set
    ]


def conn_subgraphs(
    g: FuzzyGraph,
    h1: FuzzySubgraph,
    h2: FuzzySubgraph,
    semantics: Semantics = Semantics.PATH_MAX_MIN,
) -> ConnValue:
    """Fuzzy subgraph connectivity between two proper disjoint subgraphs.

    ``PATH_MAX_MIN`` is the max-min connectivity over all vertex pairs across
    the two subgraphs. The crossing-edge semantics look only at edges with one
    endpoint in each subgraph and take the max (0 if there are none) or the
    min (:class:`NoCrossingEdge` if there are none). Their witness is the
    single crossing edge, oriented from ``h1`` to ``h2``.
    """
    _check_member(g, h1)
    _check_member(g, h2)
    check_disjoint(h1, h2)
    semantics = Semantics(semantics)
    if semantics is Semantics.PATH_MAX_MIN:
        return _conn_sets(g, h1.vertex_set, h2.vertex_set)

    crossing = _crossing_edges(g, h1, h2)
    if not crossing:
        if semantics is Semantics.CROSS_EDGE_MIN:
            raise NoCrossingEdge("no edge joins the two subgraphs")
        return ConnValue(0.0, None)
    if semantics is Semantics.CROSS_EDGE_MAX:
        m, x, y = min(crossing, key=lambda e: (-e[0], e[1], e[2]))
    else:
        m, x, y = min(crossing)
    return ConnValue(m, PathWitness((x, y), m))


def conn_matrix(g: FuzzyGraph) -> tuple[tuple[str, ...], np.ndarray]:
    """All-pairs connectivity as a dense matrix indexed by ``g.vertices``.

    Max-min transitive closure of the membership matrix (Floyd-Warshall over
    the (max, min) semiring). The diagonal is 1.
    """
    names = g.vertices
    index = {v: i for i, v in enumerate(names)}
    n = len(names)
    m = np.zeros((n, n))
    for u, v, x in g.edges():
        m[index[u], index[v]] = m[index[v], index[u]] = x
    np.fill_diagonal(m, UNIT)
    for k in range(n):
        np.maximum(m, np.minimum(m[:, k : k + 1], m[k : k + 1, :]), out=m)
    return names, m


def all_pairs_conn(g: FuzzyGraph) -> dict[tuple[str, str], float]:
    names, m = conn_matrix(g)
    return {
        (u, v): float(m[i, j]) for i, u in enumerate(names) for j, v in enumerate(names)
    }


def is_t_connected(
    g: FuzzyGraph, h1: FuzzySubgraph, h2: FuzzySubgraph, t: float, tol: float = 0.0
) -> bool:
    """Whether the pair is t-fuzzy subgraph connected.

    Exact comparison by default; ``tol`` allows ``|CONN - t| <= tol``.
    """
    value = conn_subgraphs(g, h1, h2).value
    return value == t if tol == 0.0 else abs(value - t) <= tol


@dataclass(frozen=True)
class TEquivalence:
    """Result of grouping subgraphs by t-connectivity.

    ``related`` holds the index pairs ``i < j`` with CONN = t. ``classes`` is
    the partition induced by the reflexive-symmetric-transitive closure of
    that relation. ``violations`` lists triples ``(i, j, k)`` with i~j, j~k
    but not i~k, i.e. places where the raw relation is not transitive.
    """

    family: tuple[FuzzySubgraph, ...]
    values: dict[tuple[int, int], float] = field(repr=False)
    related: frozenset[tuple[int, int]]
    classes: tuple[tuple[int, ...], ...]
    violations: tuple[tuple[int, int, int], ...]

    @property
    def transitive(self) -> bool:
        return not self.violations

    def class_members(self) -> list[list[FuzzySubgraph]]:
        return [[self.family[i] for i in c] for c in self.classes]


def t_equivalence_classes(
    g: FuzzyGraph, family: Sequence[FuzzySubgraph], t: float, tol: float = 0.0
) -> TEquivalence:
    family = tuple(family)
    n = len(family)
    for i in range(n):
        _check_member(g, family[i])
        for j in range(i + 1, n):
            check_disjoint(family[i], family[j])

    values: dict[tuple[int, int], float] = {}
    related: set[tuple[int, int]] = set()
    for i in range(n):
        for j in range(i + 1, n):
            c = conn_subgraphs(g, family[i], family[j]).value
            values[i, j] = values[j, i] = c
            if (c == t) if tol == 0.0 else abs(c - t) <= tol:
                related.add((i, j))

    def rel(i: int, j: int) -> bool:
        return i == j or (min(i, j), max(i, j)) in related

    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in related:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)

    violations = tuple(
        (i, j, k)
        for j in range(n)
        for i in range(n)
        for k in range(i + 1, n)
        if len({i, j, k}) == 3 and rel(i, j) and rel(j, k) and not rel(i, k)
    )
    return TEquivalence(
        family=family,
        values=values,
        related=frozenset(related),
        classes=tuple(tuple(c) for c in sorted(groups.values())),
        violations=violations,
    )
