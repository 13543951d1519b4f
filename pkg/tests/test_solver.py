import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypdomatic import (
    AdjacencyStructure,
    SolveBudget,
    brute_force_domatic,
    domatic_number,
    edge_domatic_number,
    generate_complete,
    generate_complete_bipartite,
    is_dominating,
    is_total_dominating,
    line_graph,
    make_hypergraph,
    max_domatic,
    total_domatic_number,
    total_edge_domatic_number,
    two_section,
    validate_partition,
)
from hypdomatic.errors import BudgetExceeded, Infeasible, InvalidParams, TooLarge
from hypdomatic.solver import find_partition
from oracles import edge_dominates, random_hypergraph, vertex_dominates

SPLIT = make_hypergraph(4, [{0, 1}, {2, 3}])


@pytest.mark.parametrize(
    "adj, total, expected",
    [
        (two_section(generate_complete(6, 3)), False, 6),
        (two_section(generate_complete(6, 3)), True, 3),
        (line_graph(generate_complete(4, 2)), False, 3),
        (AdjacencyStructure(1, (frozenset(),)), False, 1),
    ],
)
def test_max_domatic_examples(adj, total, expected):
    res = max_domatic(adj, total)
    assert res.value == expected
    assert res.optimal
    assert len(res.witness.classes) == expected
    assert validate_partition(adj, res.witness).valid


def test_single_item_witness():
    res = max_domatic(AdjacencyStructure(1, (frozenset(),)))
    assert res.witness.classes == ((0,),)


def test_hypergraph_quantities():
    k53 = generate_complete(5, 3)
    b333 = generate_complete_bipartite(3, 3, 3)
    assert domatic_number(k53).value == 5
    assert domatic_number(b333).value == 6
    assert total_domatic_number(k53).value == 2
    assert total_domatic_number(generate_complete_bipartite(4, 4, 3)).value == 4
    assert edge_domatic_number(k53).value == 10
    assert edge_domatic_number(b333).value == 9
    assert total_edge_domatic_number(k53).value == 5
    assert total_edge_domatic_number(b333).value == 9


def test_split_pairs():
    res = domatic_number(SPLIT)
    assert res.value == 2
    assert res.witness.classes == ((0, 2), (1, 3))
    assert edge_domatic_number(SPLIT).value == 1
    with pytest.raises(Infeasible):
        total_edge_domatic_number(SPLIT)


def test_isolated_vertex_infeasible():
    with pytest.raises(Infeasible):
        total_domatic_number(make_hypergraph(3, [{0, 1}]))


def test_witness_kind_tags():
    res = total_edge_domatic_number(generate_complete(5, 3))
    assert res.witness.kind == "edge" and res.witness.total
    res = domatic_number(generate_complete(5, 3))
    assert res.witness.kind == "vertex" and not res.witness.total


def test_brute_force_examples():
    assert brute_force_domatic(AdjacencyStructure.complete(4)) == 4
    assert brute_force_domatic(AdjacencyStructure.complete(5), total=True) == 2
    assert brute_force_domatic(AdjacencyStructure.from_edges(3, [(0, 1), (1, 2)])) == 2


def test_brute_force_cap():
    with pytest.raises(TooLarge):
        brute_force_domatic(AdjacencyStructure.complete(13))
    with pytest.raises(Infeasible):
        brute_force_domatic(AdjacencyStructure.from_edges(3, [(0, 1)]), total=True)


def test_budget_exceeded_reports_best():
    adj = line_graph(generate_complete(8, 2))
    with pytest.raises(BudgetExceeded) as info:
        max_domatic(adj, budget=SolveBudget(node_limit=3))
    best = info.value.best
    assert best is not None and not best.optimal
    assert 1 <= best.value < 7
    assert validate_partition(adj, best.witness).valid


def test_budget_must_be_positive():
    with pytest.raises(InvalidParams):
        SolveBudget(time_limit=0)
    with pytest.raises(InvalidParams):
        SolveBudget(node_limit=-1)


def test_deterministic_witness():
    adj = line_graph(generate_complete(8, 2))
    first = max_domatic(adj)
    second = max_domatic(adj)
    assert first.value == second.value == 7
    assert first.witness == second.witness


def test_find_partition():
    adj = line_graph(generate_complete_bipartite(4, 4, 2))
    part = find_partition(adj, 4, seeds=[[0, 5, 10, 15]], kind="edge")
    assert part is not None and validate_partition(adj, part).valid
    assert find_partition(adj, 5) is None


def _check_against_oracle(n, edges):
    h = make_hypergraph(n, edges)
    pairs = [
        (two_section(h), False, domatic_number),
        (two_section(h), True, total_domatic_number),
        (line_graph(h), False, edge_domatic_number),
        (line_graph(h), True, total_edge_domatic_number),
    ]
    for adj, total, solve in pairs:
        try:
            expected = brute_force_domatic(adj, total)
        except Infeasible:
            with pytest.raises(Infeasible):
                solve(h)
            continue
        res = solve(h)
        assert res.value == expected
        assert validate_partition(adj, res.witness).valid
        assert len(res.witness.classes) == res.value
        delta = adj.min_degree()
        cap = delta if total else delta + 1
        if res.gamma is not None:
            cap = min(cap, adj.item_count // res.gamma)
        assert 1 <= res.value <= cap


def test_random_oracle_equivalence_seeded():
    rng = random.Random(20261016)
    for _ in range(60):
        _check_against_oracle(*random_hypergraph(rng))


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_random_oracle_equivalence_hypothesis(rng):
    _check_against_oracle(*random_hypergraph(rng, max_n=7, max_m=7))


@settings(max_examples=80, deadline=None)
@given(st.randoms(use_true_random=False), st.data())
def test_reduction_identity(rng, data):
    n, edges = random_hypergraph(rng)
    h = make_hypergraph(n, edges)
    chosen = data.draw(st.sets(st.integers(0, h.m - 1)))
    lg = line_graph(h)
    assert is_dominating(lg, chosen) == edge_dominates(h.edges, chosen)
    assert is_total_dominating(lg, chosen) == edge_dominates(h.edges, chosen, total=True)
    vchosen = data.draw(st.sets(st.integers(0, n - 1)))
    ts = two_section(h)
    assert is_dominating(ts, vchosen) == vertex_dominates(n, h.edges, vchosen)
    assert is_total_dominating(ts, vchosen) == vertex_dominates(n, h.edges, vchosen, total=True)
