"""Structural analysis of fuzzy graphs.

Edge-strength statistics, fuzzy bridges, strongest paths, fuzzy trees,
complete fuzzy graphs, eccentric vertices, and a harness that evaluates the
standard subgraph-connectivity claims on a concrete pair of subgraphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any

from fuzzyconn.connectivity import (
    PathWitness,
    Semantics,
    all_pairs_conn,
    conn_subgraphs,
    conn_vertex,
    path_strength,
)
from fuzzyconn.errors import (
    EdgelessGraph,
    NoCrossingEdge,
    NotABridge,
    NotAFuzzyTree,
    UnknownEndpoint,
    VertexNotInSubgraph,
)
from fuzzyconn.graph import FuzzyGraph, FuzzySubgraph, check_disjoint, induced_subgraph


@dataclass(frozen=True)
class StrengthSummary:
    """Minimum (``r``), maximum (``d``) and ``kappa`` edge membership.

    ``kappa`` is the maximum edge strength, numerically equal to ``d``; it is
    kept separately because the subgraph-connectivity upper bound is usually
    stated in terms of it.
    """

    r: float
    d: float
    kappa: float


def strength_summary(g: FuzzyGraph) -> StrengthSummary:
    if g.num_edges == 0:
        raise EdgelessGraph("graph has no edges")
    values = g.mu_map.values()
    lo, hi = min(values), max(values)
    return StrengthSummary(r=lo, d=hi, kappa=hi)


@dataclass(frozen=True)
class WeakenedPair:
    u: str
    v: str
    before: float
    after: float


@dataclass(frozen=True)
class BridgeReport:
    edge: tuple[str, str]
    mu: float
    weakened_pairs: tuple[WeakenedPair, ...]


def weakened_pairs(
    before: dict[tuple[str, str], float], after: dict[tuple[str, str], float]
) -> tuple[WeakenedPair, ...]:
    """Unordered vertex pairs (``u < v``) whose connectivity dropped."""
    return tuple(
        WeakenedPair(u, v, before[u, v], after[u, v])
        for (u, v) in sorted(before)
        if u < v and after[u, v] < before[u, v]
    )


def is_fuzzy_bridge(g: FuzzyGraph, u: str, v: str) -> bool:
    """``uv`` is a fuzzy bridge iff ``CONN_{G-uv}(u, v) < mu(u, v)``."""
    if not g.has_edge(u, v):
        raise UnknownEndpoint(f"{u}-{v} is not an edge")
    return conn_vertex(g.without_edge(u, v), u, v).value < g.mu(u, v)


def fuzzy_bridges(g: FuzzyGraph) -> list[BridgeReport]:
    """All fuzzy bridges, in edge order, with every weakened vertex pair."""
    reports = []
    before = None
    for u, v, m in g.edges():
        if not is_fuzzy_bridge(g, u, v):
            continue
        if before is None:
            before = all_pairs_conn(g)
        pairs = weakened_pairs(before, all_pairs_conn(g.without_edge(u, v)))
        # the local criterion and the full scan must agree
        assert pairs, f"bridge {u}-{v} weakens no pair"
        reports.append(BridgeReport((u, v), m, pairs))
    return reports


def bridge_realizing_subgraphs(
    g: FuzzyGraph, edge: tuple[str, str]
) -> tuple[FuzzySubgraph, FuzzySubgraph]:
    """Singleton subgraphs on the endpoints of a fuzzy bridge.

    Their subgraph connectivity equals the bridge's membership: since no
    alternative route is as strong, the bridge itself is the strongest path.
    """
    u, v = edge
    g.require(u, v)
    if not g.has_edge(u, v) or not is_fuzzy_bridge(g, u, v):
        raise NotABridge(f"{u}-{v} is not a fuzzy bridge")
    return induced_subgraph(g, {u}), induced_subgraph(g, {v})


def strongest_path(g: FuzzyGraph) -> PathWitness:
    """A path of globally maximal strength.

    Under min-aggregation no path beats its own strongest edge, so a single
    maximum-membership edge (lexicographically first) is returned.
    """
    if g.num_edges == 0:
        raise EdgelessGraph("graph has no edges")
    m, u, v = min((-m, u, v) for u, v, m in g.edges())
    return PathWitness((u, v), -m)


def is_fuzzy_tree(g: FuzzyGraph) -> bool:
    """Whether the underlying crisp graph is a tree (connected and acyclic)."""
    if len(g) == 0 or g.num_edges != len(g) - 1:
        return False
    return len(hop_distances(g, g.vertices[0])) == len(g)


def is_complete_fuzzy_graph(g: FuzzyGraph) -> bool:
    """Every vertex pair carries ``mu(u, v) == min(sigma(u), sigma(v))`` exactly."""
    vs = g.vertices
    return all(
        g.mu(a, b) == min(g.sigma(a), g.sigma(b))
        for i, a in enumerate(vs)
        for b in vs[i + 1 :]
    )


def hop_distances(g: FuzzyGraph, source: str) -> dict[str, int]:
    """Breadth-first hop distance in the underlying crisp graph."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def eccentric_vertices(g: FuzzyGraph, u: str, h: FuzzySubgraph) -> list[str]:
    """All vertices of ``h`` at maximum hop distance from ``u``, sorted."""
    dist = hop_distances(g, u)
    far = max(dist.get(w, -1) for w in h.vertex_set)
    return sorted(w for w in h.vertex_set if dist.get(w, -1) == far)


def eccentric_vertex(g: FuzzyGraph, u: str, h1: FuzzySubgraph, h2: FuzzySubgraph) -> str:
    """The vertex of ``h2`` farthest (in hops) from ``u`` in a fuzzy tree.

    Ties go to the lexicographically smallest name.
    """
    g.require(u)
    check_disjoint(h1, h2)
    if not is_fuzzy_tree(g):
        raise NotAFuzzyTree("eccentric vertices are defined on fuzzy trees")
    if u not in h1:
        raise VertexNotInSubgraph(f"vertex {u!r} is not in the first subgraph")
    return eccentric_vertices(g, u, h2)[0]


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of evaluating one claim, with the quantities on both sides."""

    name: str
    holds: bool
    details: dict[str, Any] = field(default_factory=dict)


def _cross_value(g, h1, h2, sem) -> float | None:
    try:
        c = conn_subgraphs(g, h1, h2, sem)
    except NoCrossingEdge:
        return None
    return c.value if c.witness is not None else None


def check_theorems(g: FuzzyGraph, h1: FuzzySubgraph, h2: FuzzySubgraph) -> list[TheoremCheck]:
    """Measure the subgraph-connectivity claims on ``(h1, h2)``.

    Nothing is assumed: every check reports the computed quantities and
    whether the claimed relation holds on them. Crossing-edge values are
    ``None`` when no edge joins the two subgraphs. Tree and complete-graph
    checks are only produced when the graph has that shape.
    """
    check_disjoint(h1, h2)
    path = conn_subgraphs(g, h1, h2).value
    xmax = _cross_value(g, h1, h2, Semantics.CROSS_EDGE_MAX)
    xmin = _cross_value(g, h1, h2, Semantics.CROSS_EDGE_MIN)

    checks = []

    sym = {
        "path": [path, conn_subgraphs(g, h2, h1).value],
        "xmax": [xmax, _cross_value(g, h2, h1, Semantics.CROSS_EDGE_MAX)],
        "xmin": [xmin, _cross_value(g, h2, h1, Semantics.CROSS_EDGE_MIN)],
    }
    checks.append(TheoremCheck("symmetry", all(a == b for a, b in sym.values()), sym))

    if g.num_edges:
        s = strength_summary(g)
        ok = s.r <= path <= s.d and (xmax is None or s.r <= xmax <= s.d)
        checks.append(TheoremCheck("bounds", ok, {"r": s.r, "d": s.d, "path": path, "xmax": xmax}))
        ok = path <= s.kappa and (xmax is None or xmax <= s.kappa)
        checks.append(TheoremCheck("kappa_upper", ok, {"kappa": s.kappa, "path": path, "xmax": xmax}))

        if is_fuzzy_tree(g):
            xmax0 = 0.0 if xmax is None else xmax
            max_edge_crosses = any(
                m == s.kappa
                for u, v, m in g.edges()
                if (u in h1 and v in h2) or (u in h2 and v in h1)
            )
            checks.append(
                TheoremCheck(
                    "tree_max_edge",
                    (xmax0 == s.kappa) == max_edge_crosses,
                    {"kappa": s.kappa, "xmax": xmax, "max_edge_crosses": max_edge_crosses, "path": path},
                )
            )
            checks.append(_eccentric_check(g, h1, h2, path, xmax))

    if is_complete_fuzzy_graph(g):
        m = min(g.sigma(v) for v in h1.vertex_set | h2.vertex_set)
        checks.append(TheoremCheck("complete_min_sigma", xmin == m, {"min_sigma": m, "xmin": xmin, "path": path}))

    return checks


def _tree_path(g: FuzzyGraph, u: str, v: str) -> tuple[str, ...]:
    return conn_vertex(g, u, v).witness.vertices


def _eccentric_check(g, h1, h2, path: float, xmax: float | None) -> TheoremCheck:
    """Mutually eccentric pairs u in h1, v in h2 versus the connectivity value.

    Holds when every mutually eccentric pair's tree path has strength equal
    to the path-based subgraph connectivity.
    """
    pairs = []
    for u in sorted(h1.vertex_set):
        for v in eccentric_vertices(g, u, h2):
            if u in eccentric_vertices(g, v, h1):
                p = _tree_path(g, u, v)
                pairs.append({"u": u, "v": v, "path": list(p), "strength": path_strength(g, p)})
    holds = bool(pairs) and all(p["strength"] == path for p in pairs)
    return TheoremCheck("eccentric_path", holds, {"pairs": pairs, "path": path, "xmax": xmax})

