"""Brute-force reference implementations.

Every simple path is enumerated by backtracking, so results follow directly
from the definitions. Exponential; guarded by an :class:`OracleBudget`.
Witness tie-breaking matches :mod:`fuzzyconn.connectivity` (strongest, then
fewest hops, then lexicographically smallest), so witnesses can be compared
as well as values.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from fuzzyconn.connectivity import UNIT, ConnValue, PathWitness
from fuzzyconn.errors import BudgetExceeded
from fuzzyconn.graph import FuzzyGraph
from fuzzyconn.structural import BridgeReport, weakened_pairs


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 10
    max_paths: int = 10**6


DEFAULT_BUDGET = OracleBudget()


def _check_size(g: FuzzyGraph, budget: OracleBudget) -> None:
    if len(g) > budget.max_vertices:
        raise BudgetExceeded(
            f"graph has {len(g)} vertices; oracle budget allows {budget.max_vertices}"
        )


def simple_paths_from(
    g: FuzzyGraph, source: str, budget: OracleBudget = DEFAULT_BUDGET
) -> Iterator[tuple[tuple[str, ...], float]]:
    """Yield every simple path starting at ``source`` with its strength.

    The single-vertex path comes first. Raises :class:`BudgetExceeded` once
    more than ``budget.max_paths`` paths have been produced.
    """
    _check_size(g, budget)
    g.require(source)
    count = 0
    path = [source]
    on_path = {source}

    def walk(strength: float) -> Iterator[tuple[tuple[str, ...], float]]:
        nonlocal count
        count += 1
        if count > budget.max_paths:
            raise BudgetExceeded(f"more than {budget.max_paths} paths enumerated")
        yield tuple(path), strength
        for y, m in g.neighbors(path[-1]).items():
            if y in on_path:
                continue
            path.append(y)
            on_path.add(y)
            yield from walk(min(strength, m))
            on_path.discard(y)
            path.pop()

    yield from walk(UNIT)


def simple_paths(
    g: FuzzyGraph, u: str, v: str, budget: OracleBudget = DEFAULT_BUDGET
) -> list[tuple[tuple[str, ...], float]]:
    """All simple ``u``-``v`` paths with their strengths."""
    g.require(v)
    return [(p, s) for p, s in simple_paths_from(g, u, budget) if p[-1] == v]


def _rank(path: tuple[str, ...], strength: float) -> tuple:
    return (-strength, len(path), path)


def _best(candidates: Iterable[tuple[tuple[str, ...], float]]) -> ConnValue:
    best = min(candidates, key=lambda c: _rank(*c), default=None)
    if best is None:
        return ConnValue(0.0, None)
    path, strength = best
    return ConnValue(strength, PathWitness(path, strength))


def oracle_conn(
    g: FuzzyGraph, u: str, v: str, budget: OracleBudget = DEFAULT_BUDGET
) -> ConnValue:
    """Connectivity of ``u`` and ``v`` by exhaustive path enumeration."""
    return _best(simple_paths(g, u, v, budget))


def oracle_conn_sets(
    g: FuzzyGraph,
    sources: Iterable[str],
    targets: Iterable[str],
    budget: OracleBudget = DEFAULT_BUDGET,
) -> ConnValue:
    """Best path from any source to any target, by exhaustive enumeration."""
    targets = frozenset(targets)
    g.require(*targets)
    return _best(
        (p, s) for x in sorted(set(sources)) for p, s in simple_paths_from(g, x, budget) if p[-1] in targets
    )


def oracle_all_pairs(
    g: FuzzyGraph, budget: OracleBudget = DEFAULT_BUDGET
) -> dict[tuple[str, str], float]:
    """All-pairs connectivity; one full enumeration per source vertex."""
    table: dict[tuple[str, str], float] = {}
    for u in g.vertices:
        best = {v: 0.0 for v in g.vertices}
        for p, s in simple_paths_from(g, u, budget):
            if s > best[p[-1]]:
                best[p[-1]] = s
        for v, s in best.items():
            table[u, v] = s
    return table


def oracle_bridges(g: FuzzyGraph, budget: OracleBudget = DEFAULT_BUDGET) -> list[BridgeReport]:
    """Edges whose deletion lowers connectivity of at least one vertex pair,
    found by recomputing all-pairs connectivity on each ``G - e``."""
    _check_size(g, budget)
    before = oracle_all_pairs(g, budget)
    reports = []
    for u, v, m in g.edges():
        pairs = weakened_pairs(before, oracle_all_pairs(g.without_edge(u, v), budget))
        if pairs:
            reports.append(BridgeReport((u, v), m, pairs))
    return reports
