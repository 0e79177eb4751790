import pytest

from misbounds.canon import certificate
from misbounds.generate import (
    GenerationLimitError,
    count_nonisomorphic,
    generate_nonisomorphic,
    generate_up_to,
)
from misbounds.graph import is_connected, is_triangle_free

# published counts of unlabelled graphs by order, starting at n=1
ALL = [1, 2, 4, 11, 34, 156, 1044, 12346, 274668]
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117, 261080]
TRIANGLE_FREE = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172, 105071]
CONNECTED_TRIANGLE_FREE = [1, 1, 1, 3, 6, 19, 59, 267, 1380, 9832, 90842]


@pytest.mark.parametrize(
    "filt, table, upto",
    [((), ALL, 8), (("connected",), CONNECTED, 8),
     (("triangle-free",), TRIANGLE_FREE, 9), (("connected", "triangle-free"), CONNECTED_TRIANGLE_FREE, 9)],
)
def test_census(filt, table, upto):
    assert [count_nonisomorphic(n, filt) for n in range(1, upto + 1)] == table[:upto]


@pytest.mark.slow
@pytest.mark.parametrize(
    "filt, n, expected",
    [((), 9, ALL[8]), (("connected", "triangle-free"), 10, CONNECTED_TRIANGLE_FREE[9]),
     (("triangle-free",), 10, TRIANGLE_FREE[9])],
)
def test_census_large(filt, n, expected):
    assert count_nonisomorphic(n, filt) == expected


@pytest.mark.parametrize("n, filt", [(7, ()), (8, ("connected",)), (9, ("triangle-free",))])
def test_no_duplicates_and_filters_hold(n, filt):
    gs = list(generate_nonisomorphic(n, filt))
    certs = {certificate(g) for g in gs}
    assert len(certs) == len(gs)
    assert all(g.n == n for g in gs)
    if "connected" in filt:
        assert all(is_connected(g) for g in gs)
    if "triangle-free" in filt:
        assert all(is_triangle_free(g) for g in gs)


def test_predicate_and_range():
    assert sum(1 for _ in generate_nonisomorphic(6, predicate=lambda g: g.number_of_edges() == 3)) == 5
    assert sum(1 for _ in generate_up_to(5)) == sum(ALL[:5])
    assert sum(1 for _ in generate_up_to(5, min_n=4)) == 45


def test_limits():
    with pytest.raises(GenerationLimitError):
        next(generate_nonisomorphic(10))
    with pytest.raises(GenerationLimitError):
        next(generate_nonisomorphic(12, ["triangle-free"]))
    with pytest.raises(GenerationLimitError):
        next(generate_nonisomorphic(6, limit=5))
    with pytest.raises(ValueError):
        next(generate_nonisomorphic(0))
    with pytest.raises(ValueError):
        next(generate_nonisomorphic(3, ["planar"]))
