"""Independent sets: predicates, maximal-independent-set enumeration and counts.

Maximal independent sets are enumerated with a pivoting Bron-Kerbosch
recursion run directly on the non-adjacency relation, over bitmask triples
``(current, candidates, excluded)``.  Counting drives the very same
enumerator and only tallies its output.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, VertexLike, VertexSet, _mask_of, component_masks, iter_bits

__all__ = [
    "MISLimitExceeded",
    "is_independent",
    "is_maximal_independent",
    "enumerate_mis",
    "count_mis",
    "count_independent_sets",
]


class MISLimitExceeded(RuntimeError):
    """More maximal independent sets exist than the caller's ``limit``."""


def _independent(adj, mask: int) -> bool:
    for v in iter_bits(mask):
        if adj[v] & mask:
            return False
    return True


def is_independent(g: Graph, s: VertexLike) -> bool:
    """True when no edge of ``g`` has both ends in ``s``; the empty set qualifies."""
    return _independent(g.adj, _mask_of(s, g.n))


def is_maximal_independent(g: Graph, s: VertexLike) -> bool:
    """True when ``s`` is independent and every other vertex has a neighbour in it."""
    mask = _mask_of(s, g.n)
    if not _independent(g.adj, mask):
        return False
    for v in iter_bits(g.full & ~mask):
        if not g.adj[v] & mask:
            return False
    return True


def mis_masks(adj, full: int) -> Iterator[int]:
    """Yield every maximal independent set of the graph on ``full`` as a bitmask.

    The pivot ``u`` is the candidate-or-excluded vertex compatible with the
    most candidates (ties to the smallest index); only ``u`` and its
    neighbours among the candidates are branched on.
    """
    stack = [(0, full, 0)]
    pop, push = stack.pop, stack.append
    while stack:
        r, p, x = pop()
        if not p:
            if not x:
                yield r
            continue
        best = -1
        pivot_nbhd = 0
        for u in iter_bits(p | x):
            closed = adj[u] | (1 << u)
            c = (p & ~closed).bit_count()
            if c > best:
                best = c
                pivot_nbhd = closed
        branch = p & pivot_nbhd
        children = []
        for v in iter_bits(branch):
            bit = 1 << v
            keep = ~(adj[v] | bit)
            children.append((r | bit, p & keep, x & keep))
            p &= ~bit
            x |= bit
        for child in reversed(children):
            push(child)


def enumerate_mis(g: Graph, *, limit: int | None = None) -> Iterator[VertexSet]:
    """Stream the maximal independent sets of ``g``.

    The order is deterministic.  With ``limit`` set, at most that many sets
    are produced and :class:`MISLimitExceeded` is raised if another exists.

    Examples
    --------
    >>> from misbounds.graph import make_basic
    >>> [sorted(s) for s in enumerate_mis(make_basic("star", 4))]
    [[0], [1, 2, 3]]
    """
    produced = 0
    for mask in mis_masks(g.adj, g.full):
        if limit is not None and produced >= limit:
            raise MISLimitExceeded(f"graph has more than {limit} maximal independent sets")
        produced += 1
        yield VertexSet(mask, g.n)


def count_mis(g: Graph) -> int:
    """Number of maximal independent sets, ``mis(G)``.

    The empty graph (order 0) has exactly one, the empty set.
    """
    total = 0
    for _ in mis_masks(g.adj, g.full):
        total += 1
    return total


def _count_is(adj, mask: int, memo: dict[int, int]) -> int:
    if mask in memo:
        return memo[mask]
    comps = component_masks(adj, mask)
    if len(comps) > 1:
        result = 1
        for c in comps:
            result *= _count_is(adj, c, memo)
    else:
        best_v = -1
        best_d = 0
        for v in iter_bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 0:
            result = 1 << mask.bit_count()
        else:
            bit = 1 << best_v
            result = _count_is(adj, mask & ~bit, memo) + _count_is(adj, mask & ~(adj[best_v] | bit), memo)
    memo[mask] = result
    return result


def count_independent_sets(g: Graph) -> int:
    """Number of independent sets ``i(G)``, the empty set included.

    Branches on a vertex of maximum degree (``v`` out, or ``N[v]`` out) and
    multiplies over connected components, memoised on the remaining vertices.
    """
    return _count_is(g.adj, g.full, {})
