from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypdomatic import (
    AdjacencyStructure,
    degrees,
    generate_complete,
    generate_complete_bipartite,
    line_graph,
    make_hypergraph,
    two_section,
)
from hypdomatic.errors import DuplicateEdge, EmptyEdge, IndexOutOfRange, InvalidParams
from oracles import bipartite_edges_by_enumeration, edges_intersect


def assert_simple_graph(adj):
    for i, nbrs in enumerate(adj.neighbors):
        assert i not in nbrs
        for j in nbrs:
            assert i in adj.neighbors[j]


def test_make_hypergraph_basic():
    h = make_hypergraph(3, [{0, 1}, {1, 2}])
    assert (h.n, h.m, h.uniform_r) == (3, 2, 2)
    assert h.edges == ((0, 1), (1, 2))


def test_make_hypergraph_keeps_order_and_mixed_sizes():
    h = make_hypergraph(4, [[3, 1], [0], [2, 1, 0]])
    assert h.edges == ((1, 3), (0,), (0, 1, 2))
    assert h.uniform_r is None


@pytest.mark.parametrize(
    "n, edges, error, position",
    [
        (3, [{0, 3}], IndexOutOfRange, 0),
        (4, [{0, 1, 2}, {2, 1, 0}], DuplicateEdge, 1),
        (4, [{0}, set()], EmptyEdge, 1),
        (4, [{0}, {-1}], IndexOutOfRange, 1),
    ],
)
def test_make_hypergraph_errors(n, edges, error, position):
    with pytest.raises(error) as info:
        make_hypergraph(n, edges)
    assert info.value.position == position


def test_repeated_vertex_rejected():
    with pytest.raises(InvalidParams):
        make_hypergraph(3, [[0, 0, 1]])


@pytest.mark.parametrize("n, r, m", [(4, 2, 6), (6, 3, 20), (5, 5, 1)])
def test_generate_complete_counts(n, r, m):
    assert generate_complete(n, r).m == m


def test_complete_single_edge():
    assert generate_complete(5, 5).edges == ((0, 1, 2, 3, 4),)


def test_complete_colex_order():
    assert generate_complete(4, 2).edges == ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3))


@pytest.mark.parametrize("n, r", [(3, 0), (3, 4)])
def test_complete_invalid(n, r):
    with pytest.raises(InvalidParams):
        generate_complete(n, r)


@pytest.mark.parametrize("n", range(1, 15))
def test_complete_count_matches_binomial(n):
    for r in range(1, n + 1):
        assert generate_complete(n, r).m == comb(n, r)


@pytest.mark.parametrize("a, b, r, m", [(3, 3, 3, 18), (4, 4, 3, 48), (4, 4, 2, 16)])
def test_bipartite_counts(a, b, r, m):
    h = generate_complete_bipartite(a, b, r)
    assert h.m == m == comb(a + b, r) - comb(a, r) - comb(b, r)


def test_bipartite_r2_is_complete_bipartite_graph():
    h = generate_complete_bipartite(4, 4, 2)
    assert all(e[0] < 4 <= e[1] for e in h.edges)


def test_bipartite_matches_enumeration_oracle():
    for a in range(1, 7):
        for b in range(1, 7):
            for r in range(2, min(5, a + b) + 1):
                h = generate_complete_bipartite(a, b, r)
                assert sorted(h.edges) == sorted(bipartite_edges_by_enumeration(a, b, r))


@pytest.mark.parametrize("a, b, r", [(0, 3, 2), (3, 3, 1), (2, 2, 5)])
def test_bipartite_invalid(a, b, r):
    with pytest.raises(InvalidParams):
        generate_complete_bipartite(a, b, r)


def test_degrees():
    assert set(degrees(generate_complete_bipartite(3, 3, 3))) == {9}
    assert degrees(generate_complete(5, 3)) == [6] * 5
    assert degrees(make_hypergraph(3, [{0, 1}])) == [1, 1, 0]


def test_two_section_examples():
    assert two_section(generate_complete(5, 3)) == AdjacencyStructure.complete(5)
    assert two_section(generate_complete_bipartite(3, 3, 3)) == AdjacencyStructure.complete(6)
    pairs = two_section(make_hypergraph(4, [{0, 1}, {2, 3}]))
    assert pairs.neighbors == (frozenset({1}), frozenset({0}), frozenset({3}), frozenset({2}))


def test_line_graph_examples():
    assert line_graph(generate_complete(5, 3)).is_complete()
    h = generate_complete(6, 3)
    adj = line_graph(h)
    for i, e in enumerate(h.edges):
        missing = set(range(h.m)) - adj.neighbors[i] - {i}
        assert len(missing) == 1
        (j,) = missing
        assert set(h.edges[j]) == set(range(6)) - set(e)
    assert line_graph(make_hypergraph(4, [{0, 1}, {2, 3}])).neighbors == (frozenset(), frozenset())


@pytest.mark.parametrize("n", range(2, 9))
def test_two_section_of_complete_is_complete(n):
    for r in range(2, n + 1):
        assert two_section(generate_complete(n, r)).is_complete()


@pytest.mark.parametrize("n", range(1, 10))
def test_line_graph_complete_when_r_exceeds_half(n):
    for r in range(n // 2 + 1, n + 1):
        assert line_graph(generate_complete(n, r)).is_complete()


def test_asymmetric_adjacency_rejected():
    with pytest.raises(InvalidParams):
        AdjacencyStructure(2, (frozenset({1}), frozenset()))


hypergraphs = st.integers(1, 7).flatmap(
    lambda n: st.lists(
        st.sets(st.integers(0, n - 1), min_size=1).map(frozenset), min_size=0, max_size=10, unique=True
    ).map(lambda edges: make_hypergraph(n, edges))
)


@settings(max_examples=150, deadline=None)
@given(hypergraphs)
def test_reductions_are_simple_graphs(h):
    assert_simple_graph(two_section(h))
    assert_simple_graph(line_graph(h))


@settings(max_examples=150, deadline=None)
@given(hypergraphs)
def test_degree_sum(h):
    assert sum(degrees(h)) == sum(len(e) for e in h.edges)


@settings(max_examples=150, deadline=None)
@given(hypergraphs)
def test_line_graph_matches_pairwise_intersection(h):
    adj = line_graph(h)
    for i, j in combinations(range(h.m), 2):
        assert (j in adj.neighbors[i]) == edges_intersect(h.edges[i], h.edges[j])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(n // 2 + 1, n))))
def test_pigeonhole_uniform(params):
    n, r = params
    edges = list(combinations(range(n), r))[:6]
    assert line_graph(make_hypergraph(n, edges)).is_complete()
