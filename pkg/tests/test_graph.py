import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzyconn import FuzzyGraph, build_graph, disjoint_pair, induced_subgraph
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

from graphgen import GRID, fuzzy_graphs

SAMPLE_EDGES = [
    ("a", "b", 0.4),
    ("b", "c", 0.15),
    ("b", "d", 0.1),
    ("c", "d", 0.1),
    ("a", "d", 0.9),
    ("e", "d", 0.3),
]


def test_build_sample_graph():
    g = build_graph([(v, 1.0) for v in "abcde"], SAMPLE_EDGES)
    assert len(g) == 5
    assert g.num_edges == 6
    assert g.mu("a", "b") == 0.4
    assert g.mu("d", "e") == 0.3


def test_single_vertex_graph():
    g = build_graph([("a", 0.5)], [])
    assert g.vertices == ("a",)
    assert g.num_edges == 0
    assert g.sigma("a") == 0.5


def test_edge_above_vertex_cap_rejected():
    with pytest.raises(EdgeExceedsVertexCap):
        build_graph([("a", 0.3), ("b", 0.3)], [("a", "b", 0.5)])


def test_edge_equal_to_cap_accepted():
    g = build_graph([("a", 0.3), ("b", 0.7)], [("a", "b", 0.3)])
    assert g.mu("a", "b") == 0.3


@pytest.mark.parametrize(
    "vertices, edges, error",
    [
        ([("a", 1.0), ("a", 0.5)], [], DuplicateVertex),
        ([("a", 1.0)], [("a", "z", 0.5)], UnknownEndpoint),
        ([("a", 1.0)], [("a", "a", 0.5)], SelfLoop),
        ([("a", 1.2)], [], MembershipOutOfRange),
        ([("a", -0.1)], [], MembershipOutOfRange),
        ([("a", float("nan"))], [], MembershipOutOfRange),
        ([("a", True)], [], MembershipOutOfRange),
        ([("a", "0.5")], [], MembershipOutOfRange),
        ([("a", 1.0), ("b", 1.0)], [("a", "b", 0.0)], ZeroMembershipEdge),
        ([("a", 1.0), ("b", 1.0)], [("a", "b", 1.5)], MembershipOutOfRange),
        ([("a", 1.0), ("b", 1.0)], [("a", "b", 0.5), ("b", "a", 0.4)], DuplicateEdge),
        ([("", 1.0)], [], InvalidVertexName),
        ([("a b", 1.0)], [], InvalidVertexName),
        ([("@a", 1.0)], [], InvalidVertexName),
        ([("#a", 1.0)], [], InvalidVertexName),
        ([(3, 1.0)], [], InvalidVertexName),
    ],
)
def test_construction_errors(vertices, edges, error):
    with pytest.raises(error):
        build_graph(vertices, edges)


def test_zero_edge_is_a_range_error():
    assert issubclass(ZeroMembershipEdge, MembershipOutOfRange)


def test_edges_are_undirected(sample):
    assert sample.mu("b", "a") == sample.mu("a", "b")
    assert sample.has_edge("d", "e") and sample.has_edge("e", "d")
    assert sample.mu("a", "c") == 0.0
    assert ("d", "e", 0.3) in sample.edges()


def test_unknown_vertex_lookup(sample):
    with pytest.raises(UnknownVertex):
        sample.mu("a", "zz")
    with pytest.raises(UnknownVertex):
        sample.neighbors("zz")


def test_without_edge_leaves_original_untouched(sample):
    h = sample.without_edge("d", "a")
    assert not h.has_edge("a", "d")
    assert sample.has_edge("a", "d")
    assert h.num_edges == 5
    with pytest.raises(UnknownEndpoint):
        sample.without_edge("a", "c")


def test_graph_equality_is_order_insensitive():
    g1 = FuzzyGraph.from_edges(SAMPLE_EDGES, vertices="abcde")
    g2 = FuzzyGraph.from_edges(reversed(SAMPLE_EDGES), vertices="edcba")
    assert g1 == g2
    assert hash(g1) == hash(g2)
    assert g1 != g1.without_edge("a", "b")


def test_induced_subgraph_edges(sample):
    h = induced_subgraph(sample, {"b", "c", "d"})
    assert h.vertices == ("b", "c", "d")
    assert h.edges() == [("b", "c", 0.15), ("b", "d", 0.1), ("c", "d", 0.1)]


def test_singleton_subgraph(sample):
    h = induced_subgraph(sample, ["a"])
    assert len(h) == 1
    assert h.edges() == []


@pytest.mark.parametrize(
    "vs, error",
    [(set(), EmptyVertexSet), (set("abcde"), NotProper), ({"a", "q"}, UnknownVertex)],
)
def test_induced_subgraph_errors(sample, vs, error):
    with pytest.raises(error):
        induced_subgraph(sample, vs)


def test_induced_subgraph_rejects_bare_string(sample):
    with pytest.raises(TypeError):
        induced_subgraph(sample, "abc")


def test_disjoint_pair(sample):
    h1, h2 = disjoint_pair(sample, {"a", "d"}, {"b", "c"})
    assert h1.edges() == [("a", "d", 0.9)]
    assert h2.edges() == [("b", "c", 0.15)]


def test_disjoint_singletons():
    g = FuzzyGraph.from_edges([("a", "b", 0.5)], vertices="abc")
    h1, h2 = disjoint_pair(g, {"a"}, {"b"})
    assert (h1.vertices, h2.vertices) == (("a",), ("b",))


def test_overlapping_pair_rejected(sample):
    with pytest.raises(NotDisjoint):
        disjoint_pair(sample, {"a", "d"}, {"d", "e"})


@given(fuzzy_graphs())
def test_round_trip(g):
    rebuilt = build_graph(list(g.sigma_map.items()), g.edges())
    assert rebuilt == g
    assert sorted(rebuilt.vertices) == sorted(g.vertices)
    assert {(u, v): m for u, v, m in rebuilt.edges()} == dict(g.mu_map)


@given(fuzzy_graphs(min_vertices=2), st.data())
def test_induced_edges_are_exactly_inner_edges(g, data):
    vs = data.draw(st.sets(st.sampled_from(g.vertices), min_size=1, max_size=len(g) - 1))
    h = induced_subgraph(g, vs)
    assert h.edges() == [(u, v, m) for u, v, m in g.edges() if u in vs and v in vs]


@settings(max_examples=200)
@given(st.data())
def test_validation_is_total(data):
    """Any edge list either builds a graph satisfying mu <= min(sigma) or is rejected."""
    n = data.draw(st.integers(1, 6))
    names = [f"v{i}" for i in range(n)]
    sigma = [(v, data.draw(st.sampled_from(GRID))) for v in names]
    edges = data.draw(
        st.lists(
            st.tuples(st.sampled_from(names), st.sampled_from(names), st.sampled_from([0.0, *GRID])),
            max_size=10,
        )
    )
    try:
        g = build_graph(sigma, edges)
    except ValueError:
        return
    for u, v, m in g.edges():
        assert 0 < m <= min(g.sigma(u), g.sigma(v))


def test_random_graphs_satisfy_cap():
    from graphgen import random_graph

    rng = random.Random(7)
    for _ in range(100):
        g = random_graph(rng)
        assert all(m <= min(g.sigma(u), g.sigma(v)) for u, v, m in g.edges())
