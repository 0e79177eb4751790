import random
from itertools import permutations

import pytest
from hypothesis import given, settings

from misbounds.canon import (
    are_isomorphic,
    automorphism_generators,
    canonical_form,
    certificate,
    vertex_orbits,
)
from misbounds.graph import disjoint_union, from_edges, make_basic, relabel, to_graph6
from oracles import edge_set, graph_from_mask, isomorphic
from strategies import graphs, permuted


@settings(max_examples=300)
@given(permuted(1, 10))
def test_certificate_invariant_under_relabelling(case):
    g, perm = case
    assert certificate(relabel(g, perm)) == certificate(g)


def test_certificate_invariant_on_random_relabellings():
    rng = random.Random(1)
    for _ in range(1000):
        n = rng.randint(1, 12)
        g = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2))
        perm = list(range(n))
        rng.shuffle(perm)
        assert certificate(relabel(g, perm)) == certificate(g)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_certificates_split_labelled_graphs_into_isomorphism_classes(n):
    # every labelled graph of order n, grouped by certificate, against brute force
    m = n * (n - 1) // 2
    classes: dict[bytes, list] = {}
    for mask in range(1 << m):
        g = graph_from_mask(n, mask)
        classes.setdefault(certificate(g), []).append(g)
    assert len(classes) == [1, 2, 4, 11, 34][n - 1]
    reps = [members[0] for members in classes.values()]
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert not isomorphic(a, b)
    for members in classes.values():
        assert all(isomorphic(members[0], h) for h in members[1:4])


@settings(max_examples=200)
@given(graphs(1, 7), graphs(1, 7))
def test_are_isomorphic_agrees_with_permutation_search(g, h):
    if g.n == h.n:
        assert are_isomorphic(g, h) == isomorphic(g, h)
    else:
        assert not are_isomorphic(g, h)


@settings(max_examples=200)
@given(graphs(1, 9))
def test_labeling_maps_graph_onto_certificate_graph(g):
    cf = canonical_form(g)
    lab = cf.labeling
    assert sorted(lab) == list(range(g.n))
    canon = relabel(g, list(lab))
    assert certificate(canon) == cf.certificate
    assert to_graph6(canon).encode() == cf.certificate


@settings(max_examples=150)
@given(graphs(1, 7))
def test_automorphisms_preserve_edges(g):
    e = edge_set(g)
    for p in automorphism_generators(g):
        assert {frozenset((p[u], p[v])) for u, v in g.edges()} == e


@settings(max_examples=80)
@given(graphs(1, 6))
def test_orbits_match_brute_force(g):
    e = edge_set(g)
    auts = [p for p in permutations(range(g.n)) if {frozenset((p[u], p[v])) for u, v in g.edges()} == e]
    expected = [min(p[v] for p in auts) for v in range(g.n)]
    assert vertex_orbits(g) == expected


@pytest.mark.parametrize(
    "g, orbit_count",
    [
        (make_basic("complete", 6), 1),
        (make_basic("cycle", 7), 1),
        (make_basic("star", 6), 2),
        (make_basic("path", 5), 3),
        (disjoint_union([make_basic("complete", 3)] * 3), 1),
        (make_basic("empty", 10), 1),
    ],
)
def test_symmetric_graphs(g, orbit_count):
    assert len(set(vertex_orbits(g))) == orbit_count


def test_non_isomorphic_with_same_degrees():
    # C6 versus two triangles, both 2-regular
    assert not are_isomorphic(make_basic("cycle", 6), disjoint_union([make_basic("complete", 3)] * 2))
    # two 3-regular graphs of order 6
    prism = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    k33 = from_edges(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert not are_isomorphic(prism, k33)
    assert are_isomorphic(k33, relabel(k33, [0, 3, 1, 4, 2, 5]))
