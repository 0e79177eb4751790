import random

import pytest
from hypothesis import given, settings

from misbounds.families import make_A5
from misbounds.generate import generate_up_to
from misbounds.graph import VertexSet, disjoint_union, from_edges, induced_subgraph, make_basic
from misbounds.matching import matched_vertices, maximum_matching
from misbounds.mis import (
    MISLimitExceeded,
    count_independent_sets,
    count_mis,
    enumerate_mis,
    is_independent,
    is_maximal_independent,
)
from oracles import graph_from_mask, is_count, maximal_independent_sets
from strategies import graphs

K3 = make_basic("complete", 3)
C5 = make_basic("cycle", 5)
P4 = make_basic("path", 4)


def test_independence_predicates():
    assert not is_independent(K3, [0, 1])
    assert is_independent(C5, [0, 2])
    assert is_independent(C5, [])
    assert is_maximal_independent(C5, [0, 2])
    assert not is_maximal_independent(P4, [2])
    assert is_maximal_independent(make_basic("empty", 4), range(4))
    assert not is_maximal_independent(K3, [0, 1])


@pytest.mark.parametrize(
    "g, expected",
    [
        (K3, [{0}, {1}, {2}]),
        (make_basic("star", 4), [{0}, {1, 2, 3}]),
        (C5, [{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}]),
    ],
)
def test_enumerate_examples(g, expected):
    got = [set(s) for s in enumerate_mis(g)]
    assert sorted(map(sorted, got)) == sorted(map(sorted, expected))


@pytest.mark.parametrize(
    "g, mis, i",
    [
        (disjoint_union([K3, K3]), 9, 16),
        (make_A5(), 5, None),
        (P4, 3, 8),
        (make_basic("complete", 2), 2, 3),
        (C5, 5, 11),
        (disjoint_union([make_basic("complete", 2)] * 4), 16, 81),
    ],
)
def test_count_examples(g, mis, i):
    assert count_mis(g) == mis
    if i is not None:
        assert count_independent_sets(g) == i


def test_all_graphs_to_order_seven_match_subset_oracle():
    for g in generate_up_to(7):
        oracle = maximal_independent_sets(g)
        got = [frozenset(s) for s in enumerate_mis(g)]
        assert len(got) == len(set(got))
        assert set(got) == set(oracle)
        assert count_mis(g) == len(oracle)
        assert count_independent_sets(g) == is_count(g)


@settings(max_examples=200)
@given(graphs(1, 10))
def test_enumeration_is_deterministic_and_valid(g):
    first = list(enumerate_mis(g))
    assert first == list(enumerate_mis(g))
    assert all(is_maximal_independent(g, s) for s in first)
    assert len({s.bits for s in first}) == len(first) == count_mis(g)


def test_multiplicative_over_disjoint_union():
    rng = random.Random(7)
    for _ in range(500):
        a = rng.randint(1, 11)
        b = rng.randint(1, 12 - a)
        g = graph_from_mask(a, rng.getrandbits(a * (a - 1) // 2))
        h = graph_from_mask(b, rng.getrandbits(b * (b - 1) // 2))
        u = disjoint_union([g, h])
        assert count_mis(u) == count_mis(g) * count_mis(h)
        assert count_independent_sets(u) == count_independent_sets(g) * count_independent_sets(h)


@settings(max_examples=100)
@given(graphs(1, 9))
def test_isolated_vertices_do_not_change_mis(g):
    for k in (1, 2, 3):
        assert count_mis(disjoint_union([g, make_basic("empty", k)])) == count_mis(g)


def test_induced_subgraphs_never_have_more_mis():
    for g in generate_up_to(6):
        total = count_mis(g)
        for mask in range(1, 1 << g.n):
            assert count_mis(induced_subgraph(g, VertexSet(mask, g.n))) <= total


@settings(max_examples=200)
@given(graphs(1, 9))
def test_matched_core_bound(g):
    core = VertexSet(matched_vertices(maximum_matching(g)), g.n)
    assert count_mis(g) <= count_independent_sets(induced_subgraph(g, core))


def test_empty_graph_and_limit():
    assert count_mis(make_basic("empty", 5)) == 1
    assert count_independent_sets(make_basic("empty", 5)) == 32
    g = disjoint_union([K3] * 4)
    assert len(list(enumerate_mis(g, limit=81))) == 81
    with pytest.raises(MISLimitExceeded):
        list(enumerate_mis(g, limit=80))


def test_disjoint_triangles():
    assert count_mis(disjoint_union([K3] * 10)) == 3**10
    assert count_independent_sets(disjoint_union([K3] * 21)) == 4**21


def test_large_sparse_graph():
    # perfect matching on 64 vertices: 2^32 maximal sets, counted via the product
    g = from_edges(64, [(2 * i, 2 * i + 1) for i in range(32)])
    assert count_independent_sets(g) == 3**32
    half = from_edges(20, [(2 * i, 2 * i + 1) for i in range(10)])
    assert count_mis(half) == 2**10
