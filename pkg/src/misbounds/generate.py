"""Non-isomorphic graph generation by canonical vertex augmentation.

Every graph of order n is built from a representative of order n-1 by adding
a vertex ``x`` with neighbourhood ``S``.  A child is kept only when ``x`` lies
in the orbit of the canonically chosen "last" vertex: the vertex with the
smallest canonical label inside the final cell of the equitable refinement
of the degree partition.  That cell always consists of maximum-degree
vertices, so most candidates are rejected on degree alone before any
refinement is done.  Children of a parent with non-trivial automorphisms are
additionally deduplicated by canonical code.

Triangle-freeness is hereditary, so under that filter only independent
neighbourhoods are tried and orders up to 11 stay cheap.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from itertools import combinations

from .canon import _orbit_roots, _search, degree_partition, refine
from .graph import Graph, component_masks, iter_bits

__all__ = [
    "GenerationLimitError",
    "DEFAULT_LIMIT",
    "TRIANGLE_FREE_LIMIT",
    "FILTERS",
    "generate_nonisomorphic",
    "count_nonisomorphic",
]

DEFAULT_LIMIT = 9
TRIANGLE_FREE_LIMIT = 11
FILTERS = ("connected", "triangle-free")


class GenerationLimitError(ValueError):
    """Requested order is beyond what the internal generator will attempt."""


_SUBSETS: dict[tuple[int, int], list[int]] = {}


def _subsets(m: int, k: int) -> list[int]:
    key = (m, k)
    if key not in _SUBSETS:
        _SUBSETS[key] = [sum(1 << v for v in c) for c in combinations(range(m), k)]
    return _SUBSETS[key]


def _independent(adj, s: int) -> bool:
    for v in iter_bits(s):
        if adj[v] & s:
            return False
    return True


def _children(parent: tuple[int, ...], triangle_free: bool) -> Iterator[tuple[int, ...]]:
    m = len(parent)
    x = m
    xbit = 1 << x
    if m == 0:
        yield (0,)
        return
    degs = [row.bit_count() for row in parent]
    maxd = max(degs)
    top = sum(1 << v for v in range(m) if degs[v] == maxd)
    dedupe = bool(_search(parent, degree_partition(parent)).gens)
    seen = set()
    for k in range(maxd, m + 1):
        for s in _subsets(m, k):
            # x must end up with maximum degree
            if k == maxd and s & top:
                continue
            if triangle_free and not _independent(parent, s):
                continue
            child = tuple([row | xbit if s >> v & 1 else row for v, row in enumerate(parent)] + [s])
            cells = refine(child, degree_partition(child))
            last = cells[-1]
            if not last & xbit:
                continue
            code = None
            if last != xbit:
                search = _search(child, cells)
                order = search.best_order
                first_in_last = next(v for v in order if last >> v & 1)
                if first_in_last != x:
                    roots = _orbit_roots(m + 1, search.gens)
                    if roots[x] != roots[first_in_last]:
                        continue
                code = search.best_code
            if dedupe:
                if code is None:
                    code = _search(child, cells).best_code
                if code in seen:
                    continue
                seen.add(code)
            yield child


_LEVELS: dict[tuple[int, bool], list[tuple[int, ...]]] = {}


def _level(m: int, triangle_free: bool) -> list[tuple[int, ...]]:
    # parents are kept so that sweeps over n = 1..9 build each level once
    key = (m, triangle_free)
    if key not in _LEVELS:
        if m == 0:
            _LEVELS[key] = [()]
        else:
            _LEVELS[key] = [c for p in _level(m - 1, triangle_free) for c in _children(p, triangle_free)]
    return _LEVELS[key]


def _limit_for(filters: frozenset[str]) -> int:
    return TRIANGLE_FREE_LIMIT if "triangle-free" in filters else DEFAULT_LIMIT


def generate_nonisomorphic(
    n: int,
    filter: Iterable[str] = (),
    *,
    predicate: Callable[[Graph], bool] | None = None,
    limit: int | None = None,
) -> Iterator[Graph]:
    """Yield one graph per isomorphism class of order ``n``.

    Parameters
    ----------
    n : int
        Order, at least 1.
    filter : iterable of str
        Any of ``"connected"`` and ``"triangle-free"``.
    predicate : callable, optional
        Extra per-graph test applied after the named filters.
    limit : int, optional
        Largest order the generator will attempt.  Defaults to 9, or 11 when
        ``"triangle-free"`` is requested.

    Raises
    ------
    GenerationLimitError
        If ``n`` exceeds the limit; read a graph6 corpus instead.

    Examples
    --------
    >>> sum(1 for _ in generate_nonisomorphic(4))
    11
    >>> sum(1 for _ in generate_nonisomorphic(5, {"connected"}))
    21
    """
    filters = frozenset(filter)
    unknown = filters - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filter(s) {sorted(unknown)}; choose from {FILTERS}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    cap = _limit_for(filters) if limit is None else limit
    if n > cap:
        raise GenerationLimitError(
            f"order {n} exceeds the internal generation limit {cap}; use a graph6 corpus"
        )
    triangle_free = "triangle-free" in filters
    connected = "connected" in filters
    for p in _level(n - 1, triangle_free):
        for adj in _children(p, triangle_free):
            if connected and len(component_masks(adj, (1 << n) - 1)) != 1:
                continue
            g = Graph(n, adj, check=False)
            if predicate is None or predicate(g):
                yield g


def count_nonisomorphic(n: int, filter: Iterable[str] = ()) -> int:
    return sum(1 for _ in generate_nonisomorphic(n, filter))


def generate_up_to(max_n: int, filter: Iterable[str] = (), *, min_n: int = 1, **kw) -> Iterator[Graph]:
    """All graphs of orders ``min_n .. max_n`` passing ``filter``, by increasing order."""
    for n in range(min_n, max_n + 1):
        yield from generate_nonisomorphic(n, filter, **kw)

