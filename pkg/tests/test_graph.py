import pickle

import pytest
from hypothesis import given, settings

from misbounds.graph import (
    Graph,
    GraphFormatError,
    VertexSet,
    add_pendant_vertices,
    components,
    delete_vertices,
    disjoint_union,
    from_edges,
    induced_subgraph,
    is_connected,
    is_triangle_free,
    make_basic,
    neighborhood,
    parse_graph6,
    read_graph6,
    relabel,
    to_graph6,
)
from oracles import edge_set
from strategies import graphs


K3 = make_basic("complete", 3)
C5 = make_basic("cycle", 5)


@pytest.mark.parametrize(
    "text, n, edges",
    [("A_", 2, [(0, 1)]), ("A?", 2, []), ("Bw", 3, [(0, 1), (0, 2), (1, 2)]), ("@", 1, [])],
)
def test_parse_known_strings(text, n, edges):
    g = parse_graph6(text)
    assert g.n == n
    assert g.edges() == edges


def test_encode_known_graphs():
    assert to_graph6(K3) == "Bw"
    assert to_graph6(make_basic("empty", 1)) == "@"
    # 0-1-2-3-4-0, column-major upper triangle: 1 01 001 1001, padded to 101001 100100
    assert to_graph6(C5) == chr(5 + 63) + chr(0b101001 + 63) + chr(0b100100 + 63) == "Dhc"


def test_header_and_whitespace_are_ignored():
    assert parse_graph6(">>graph6<<Bw\n") == K3


@given(graphs(1, 12))
def test_round_trip_is_identity(g):
    assert parse_graph6(to_graph6(g)) == g


@pytest.mark.parametrize("n", [62, 63, 64])
def test_round_trip_at_large_orders(n):
    g = from_edges(n, [(i, (i * 7 + 3) % n) for i in range(n) if i != (i * 7 + 3) % n])
    text = to_graph6(g)
    assert text.startswith("~") == (n > 62)
    assert parse_graph6(text) == g


def test_long_form_header_is_accepted_for_small_orders():
    assert parse_graph6("~??Bw") == K3


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("?", 0),  # order 0
        ("B w", 1),  # space is outside 63..126
        ("Bww", 2),  # trailing character
        ("D", 1),  # truncated
        ("~~??????", 0),  # eight-byte order
        ("~?A@", 0),  # order 65
    ],
)
def test_parse_errors_name_byte_offset(text, offset):
    with pytest.raises(GraphFormatError) as err:
        parse_graph6(text)
    assert err.value.offset == offset
    assert "offset" in str(err.value)


def test_read_graph6_skips_blank_lines():
    assert [g.n for g in read_graph6(["Bw\n", "\n", "A_"])] == [3, 2]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph(65, [0] * 65)
    with pytest.raises(ValueError):
        from_edges(2, [(0, 0)])


def test_graph_is_immutable_and_picklable():
    with pytest.raises(AttributeError):
        K3.n = 4
    assert pickle.loads(pickle.dumps(C5)) == C5
    assert hash(pickle.loads(pickle.dumps(C5))) == hash(C5)


@pytest.mark.parametrize(
    "kind, n, m, degrees",
    [
        ("complete", 3, 3, [2, 2, 2]),
        ("cycle", 5, 5, [2] * 5),
        ("star", 4, 3, [3, 1, 1, 1]),
        ("path", 4, 3, [1, 2, 2, 1]),
        ("empty", 3, 0, [0, 0, 0]),
    ],
)
def test_make_basic(kind, n, m, degrees):
    g = make_basic(kind, n)
    assert g.number_of_edges() == m
    assert g.degrees() == degrees


@pytest.mark.parametrize("kind, n", [("cycle", 2), ("path", 0), ("star", 0), ("complete", 65), ("wheel", 4)])
def test_make_basic_rejects(kind, n):
    with pytest.raises(ValueError):
        make_basic(kind, n)


def test_disjoint_union():
    two = disjoint_union([K3, K3])
    assert (two.n, two.number_of_edges(), len(components(two))) == (6, 6, 2)
    k2k1 = disjoint_union([make_basic("complete", 2), make_basic("empty", 1)])
    assert k2k1.edges() == [(0, 1)] and k2k1.n == 3
    a9 = disjoint_union([C5, make_basic("complete", 2), make_basic("complete", 2)])
    assert a9.n == 9 and len(components(a9)) == 3
    with pytest.raises(ValueError):
        disjoint_union([make_basic("empty", 40)] * 2)


def test_induced_and_deleted():
    assert induced_subgraph(C5, [0, 1, 2]) == make_basic("path", 3)
    assert induced_subgraph(make_basic("complete", 5), [1, 3, 4]) == K3
    assert induced_subgraph(C5, range(5)) is C5
    assert delete_vertices(C5, [0]).edges() == [(0, 1), (1, 2), (2, 3)]
    assert delete_vertices(make_basic("star", 4), [0]) == make_basic("empty", 3)
    assert delete_vertices(C5, []) == C5
    with pytest.raises(ValueError):
        induced_subgraph(C5, [5])


@given(graphs(1, 9))
def test_delete_is_induced_on_complement(g):
    s = [v for v in range(g.n) if v % 3 == 0]
    rest = [v for v in range(g.n) if v % 3]
    assert delete_vertices(g, s) == induced_subgraph(g, rest)


def test_neighborhood():
    assert neighborhood(C5, 0) == {1, 4}
    assert set(neighborhood(make_basic("star", 4), 0, closed=True)) == {0, 1, 2, 3}
    assert len(neighborhood(make_basic("empty", 3), 0)) == 0
    with pytest.raises(ValueError):
        neighborhood(C5, 5)


def test_components_and_flags():
    two = disjoint_union([K3, K3])
    assert len(components(two)) == 2 and not is_connected(two) and not is_triangle_free(two)
    assert is_connected(C5) and is_triangle_free(C5)
    assert len(components(disjoint_union([K3, make_basic("empty", 1)]))) == 2
    assert is_connected(make_basic("empty", 1))
    assert not is_connected(delete_vertices(K3, [0, 1, 2]))


@given(graphs(1, 9))
def test_components_partition_vertices(g):
    comps = components(g)
    seen = 0
    for c in comps:
        assert not seen & c.bits
        seen |= c.bits
        for v in c:
            assert not g.adj[v] & ~c.bits
    assert seen == g.full


@given(graphs(3, 8))
def test_triangle_free_matches_definition(g):
    e = edge_set(g)
    has = any(
        {frozenset((a, b)), frozenset((a, c)), frozenset((b, c))} <= e
        for a in range(g.n) for b in range(a + 1, g.n) for c in range(b + 1, g.n)
    )
    assert is_triangle_free(g) == (not has)


def test_relabel_and_pendants():
    g = relabel(make_basic("path", 3), [1, 0, 2])
    assert g.edges() == [(0, 1), (0, 2)]
    with pytest.raises(ValueError):
        relabel(K3, [0, 0, 1])
    h = add_pendant_vertices(K3, 0, 2)
    assert h.n == 5 and h.degree(0) == 4 and h.leaves() == 0b11000


def test_vertex_set_behaviour():
    a = VertexSet.of([0, 2], 4)
    b = VertexSet.of([2, 3], 4)
    assert list(a | b) == [0, 2, 3]
    assert list(a & b) == [2]
    assert list(a - b) == [0]
    assert list(a.complement()) == [1, 3]
    assert 2 in a and 1 not in a and len(a) == 2
    with pytest.raises(ValueError):
        VertexSet(1 << 5, 4)


@settings(max_examples=50)
@given(graphs(2, 10))
def test_edges_listed_once_in_order(g):
    es = g.edges()
    assert es == sorted(es) and all(u < v for u, v in es)
    assert len(es) == g.number_of_edges() == sum(g.degrees()) // 2
