import random

import pytest
from hypothesis import given, settings

from misbounds.families import make_E
from misbounds.generate import generate_up_to
from misbounds.graph import add_pendant_vertices, delete_vertices, disjoint_union, from_edges, make_basic
from misbounds.matching import (
    InvalidMatchingError,
    find_augmenting_path,
    gallai_edmonds,
    has_perfect_matching,
    is_factor_critical,
    is_induced_matching,
    is_saturated_by_all_maximum_matchings,
    matching_number,
    maximum_matching,
    validate_matching,
)
from oracles import all_maximum_matchings, edge_set, graph_from_mask
from oracles import matching_number as oracle_mu
from strategies import graphs

K3 = make_basic("complete", 3)
C5 = make_basic("cycle", 5)
P4 = make_basic("path", 4)
STAR3 = make_basic("star", 4)


def _is_augmenting(g, m, path):
    matched = {v for e in m for v in e}
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if path[0] in matched or path[-1] in matched:
        return False
    mset = {frozenset(e) for e in m}
    for i, (a, b) in enumerate(zip(path, path[1:])):
        if not g.has_edge(a, b) or (frozenset((a, b)) in mset) != (i % 2 == 1):
            return False
    return True


def test_augmenting_path_examples():
    assert find_augmenting_path(make_basic("path", 3), []) in ([0, 1], [1, 0], [1, 2], [2, 1])
    assert find_augmenting_path(C5, [(0, 1), (2, 3)]) is None
    path = find_augmenting_path(P4, [(1, 2)])
    assert path in ([0, 1, 2, 3], [3, 2, 1, 0])


def test_augmenting_path_through_blossom():
    # triangle 0-1-2 with stems 2-3 and 0-4; matching {(1,2)} forces a contraction
    g = from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4)])
    m = [(1, 2), (0, 4)]
    assert find_augmenting_path(g, m) is None
    path = find_augmenting_path(g, [(1, 2)])
    assert _is_augmenting(g, [(1, 2)], path)


def test_invalid_matchings_are_rejected():
    with pytest.raises(InvalidMatchingError):
        find_augmenting_path(P4, [(0, 2)])
    with pytest.raises(InvalidMatchingError):
        find_augmenting_path(P4, [(0, 1), (1, 2)])
    with pytest.raises(InvalidMatchingError):
        is_induced_matching(P4, [(0, 9)])
    assert validate_matching(P4, [(1, 0)]) == frozenset({(0, 1)})


@settings(max_examples=300)
@given(graphs(1, 12))
def test_augmenting_paths_are_valid(g):
    # grow a greedy matching, then augment until none is left
    m = set()
    used = set()
    for u, v in g.edges():
        if u not in used and v not in used and (u + v) % 3:
            m.add((u, v))
            used |= {u, v}
    while (path := find_augmenting_path(g, m)) is not None:
        assert _is_augmenting(g, m, path)
        pairs = {frozenset(p) for p in zip(path, path[1:])}
        mset = {frozenset(e) for e in m} ^ pairs
        m = {tuple(sorted(e)) for e in mset}
    assert len(m) == matching_number(g)


def test_all_graphs_to_order_seven_match_oracle():
    for g in generate_up_to(7):
        m = maximum_matching(g)
        assert validate_matching(g, m) == m
        assert len(m) == matching_number(g) == oracle_mu(g)


def test_berge_certificate_to_order_eight():
    for g in generate_up_to(8):
        assert find_augmenting_path(g, maximum_matching(g)) is None


def test_random_larger_graphs_match_oracle():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(8, 12)
        p = rng.random()
        mask = sum(1 << i for i in range(n * (n - 1) // 2) if rng.random() < p * 0.5)
        g = graph_from_mask(n, mask)
        assert matching_number(g) == oracle_mu(g)


@pytest.mark.parametrize(
    "g, mu",
    [
        (C5, 2),
        (disjoint_union([K3, K3, K3, make_basic("empty", 2)]), 3),
        (make_E(3, 2), 3),
        (make_basic("complete", 64), 32),
        (make_basic("cycle", 63), 31),
        (make_basic("star", 40), 1),
    ],
)
def test_matching_number_examples(g, mu):
    assert matching_number(g) == mu


def test_deterministic_output():
    g = make_basic("cycle", 9)
    assert maximum_matching(g) == maximum_matching(g)


def test_saturation_examples():
    assert is_saturated_by_all_maximum_matchings(STAR3, 0)
    assert not any(is_saturated_by_all_maximum_matchings(C5, v) for v in range(5))
    assert is_saturated_by_all_maximum_matchings(P4, 1)
    with pytest.raises(ValueError):
        is_saturated_by_all_maximum_matchings(P4, 4)


def test_saturation_matches_all_maximum_matchings():
    for g in generate_up_to(6):
        ms = all_maximum_matchings(g)
        for v in range(g.n):
            always = all(any(v in e for e in m) for m in ms)
            assert is_saturated_by_all_maximum_matchings(g, v) == always


def test_vertex_deletion_dichotomy():
    for g in generate_up_to(7):
        mu = matching_number(g)
        for v in range(g.n):
            assert matching_number(delete_vertices(g, [v])) in (mu - 1, mu)


def test_leaf_attachment_keeps_matching_number():
    for g in generate_up_to(6, ["connected"]):
        mu = matching_number(g)
        for v in range(g.n):
            if is_saturated_by_all_maximum_matchings(g, v):
                for k in (1, 2):
                    assert matching_number(add_pendant_vertices(g, v, k)) == mu


@pytest.mark.parametrize(
    "g, D, A, C",
    [
        (C5, [0, 1, 2, 3, 4], [], []),
        (make_basic("complete", 2), [], [], [0, 1]),
        (STAR3, [1, 2, 3], [0], []),
        (P4, [], [], [0, 1, 2, 3]),
        (make_basic("path", 5), [0, 2, 4], [1, 3], []),
    ],
)
def test_gallai_edmonds_examples(g, D, A, C):
    ge = gallai_edmonds(g)
    assert (list(ge.D), list(ge.A), list(ge.C)) == (D, A, C)


def test_gallai_edmonds_partition_and_definition():
    for g in generate_up_to(6):
        ge = gallai_edmonds(g)
        assert ge.D.bits | ge.A.bits | ge.C.bits == g.full
        assert not (ge.D.bits & ge.A.bits or ge.D.bits & ge.C.bits or ge.A.bits & ge.C.bits)
        ms = all_maximum_matchings(g)
        missed = {v for v in range(g.n) if any(all(v not in e for e in m) for m in ms)}
        assert set(ge.D) == missed
        assert all(g.adj[a] & ge.D.bits for a in ge.A)


@pytest.mark.parametrize(
    "g, expected",
    [(C5, True), (make_basic("complete", 4), False), (make_basic("path", 3), False),
     (K3, True), (make_basic("empty", 1), True), (disjoint_union([K3, K3, make_basic("empty", 1)]), False)],
)
def test_factor_critical_examples(g, expected):
    assert is_factor_critical(g) == expected


def test_everything_in_D_means_factor_critical_components():
    for g in generate_up_to(7, ["connected"]):
        if len(gallai_edmonds(g).D) == g.n:
            assert is_factor_critical(g)


def test_perfect_matching():
    assert has_perfect_matching(P4)
    assert not has_perfect_matching(C5)


def test_induced_matching_examples():
    assert is_induced_matching(disjoint_union([make_basic("complete", 2)] * 2), [(0, 1), (2, 3)])
    assert not is_induced_matching(P4, [(0, 1), (2, 3)])
    for m in all_maximum_matchings(C5):
        assert not is_induced_matching(C5, m)
    assert is_induced_matching(C5, [(0, 1)])


@settings(max_examples=200)
@given(graphs(2, 9))
def test_induced_matching_definition(g):
    m = maximum_matching(g)
    cover = {v for e in m for v in e}
    induced = {e for e in edge_set(g) if e <= cover}
    assert is_induced_matching(g, m) == (induced == {frozenset(e) for e in m})
