"""Maximum matchings in general graphs and the Gallai-Edmonds decomposition.

Matchings are frozensets of edges ``(u, v)`` with ``u < v``.  The blossom
search follows Edmonds: a BFS alternating forest is grown from one exposed
root, and odd cycles are shrunk by redirecting every vertex of the cycle to a
common base.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, VertexSet, _induced, component_masks, iter_bits

__all__ = [
    "Matching",
    "InvalidMatchingError",
    "GEDecomposition",
    "validate_matching",
    "find_augmenting_path",
    "maximum_matching",
    "matching_number",
    "has_perfect_matching",
    "is_saturated_by_all_maximum_matchings",
    "gallai_edmonds",
    "is_factor_critical",
    "is_induced_matching",
    "matched_vertices",
]

Matching = frozenset  # of (u, v) pairs with u < v


class InvalidMatchingError(ValueError):
    """The supplied edge set is not a matching of the graph."""


@dataclass(frozen=True)
class GEDecomposition:
    """``D``: vertices missed by some maximum matching; ``A``: neighbours of
    ``D`` outside it; ``C``: everything else."""

    D: VertexSet
    A: VertexSet
    C: VertexSet


def validate_matching(g: Graph, m: Iterable[tuple[int, int]]) -> Matching:
    """Normalise ``m`` to a :data:`Matching`, raising if it is not one in ``g``."""
    seen = 0
    out = set()
    for e in m:
        u, v = e
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise InvalidMatchingError(f"edge {e} has a vertex outside 0..{g.n - 1}")
        if not g.has_edge(u, v):
            raise InvalidMatchingError(f"{e} is not an edge of the graph")
        ends = (1 << u) | (1 << v)
        if seen & ends:
            raise InvalidMatchingError(f"edge {e} shares a vertex with another matching edge")
        seen |= ends
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def matched_vertices(m: Matching) -> int:
    """Bitmask ``V(M)`` of vertices covered by ``m``."""
    mask = 0
    for u, v in m:
        mask |= (1 << u) | (1 << v)
    return mask


def _augment_from(adj, mate: list[int], root: int) -> list[int] | None:
    """Alternating path from exposed ``root`` to another exposed vertex, or None."""
    n = len(adj)
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for to in iter_bits(adj[v]):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                b = lca(v, to)
                blossom = [False] * n
                mark(v, b, to, blossom)
                mark(to, b, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = b
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    path = [to]
                    cur = to
                    while True:
                        pv = parent[cur]
                        path.append(pv)
                        if mate[pv] == -1:
                            break
                        cur = mate[pv]
                        path.append(cur)
                    path.reverse()
                    return path
                used[mate[to]] = True
                queue.append(mate[to])
    return None


def _flip(mate: list[int], path: list[int]) -> None:
    for i in range(0, len(path), 2):
        a, b = path[i], path[i + 1]
        mate[a], mate[b] = b, a


def _mates(n: int, m: Matching) -> list[int]:
    mate = [-1] * n
    for u, v in m:
        mate[u], mate[v] = v, u
    return mate


def find_augmenting_path(g: Graph, m: Iterable[tuple[int, int]]) -> list[int] | None:
    """An ``m``-augmenting path as a vertex list, or None when ``m`` is maximum.

    The path starts and ends at exposed vertices and alternates between
    non-matching and matching edges.

    Raises
    ------
    InvalidMatchingError
        If ``m`` is not a matching of ``g``.
    """
    mate = _mates(g.n, validate_matching(g, m))
    for root in range(g.n):
        if mate[root] == -1 and g.adj[root]:
            path = _augment_from(g.adj, mate, root)
            if path is not None:
                return path
    return None


def _maximum_mates(adj) -> list[int]:
    n = len(adj)
    mate = [-1] * n
    # greedy start; exposed vertices are then tried once each
    for v in range(n):
        if mate[v] == -1:
            for u in iter_bits(adj[v]):
                if mate[u] == -1:
                    mate[u], mate[v] = v, u
                    break
    for root in range(n):
        if mate[root] == -1 and adj[root]:
            path = _augment_from(adj, mate, root)
            if path is not None:
                _flip(mate, path)
    return mate


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``; the choice is deterministic.

    Examples
    --------
    >>> from misbounds.graph import make_basic
    >>> len(maximum_matching(make_basic("cycle", 5)))
    2
    """
    mate = _maximum_mates(g.adj)
    return frozenset((v, u) for v, u in enumerate(mate) if v < u)


def _mu(adj) -> int:
    return sum(1 for v, u in enumerate(_maximum_mates(adj)) if u > v)


def matching_number(g: Graph) -> int:
    """``mu(G)``, the size of a maximum matching."""
    return _mu(g.adj)


def has_perfect_matching(g: Graph) -> bool:
    return 2 * _mu(g.adj) == g.n


def _mu_without(adj, v: int) -> int:
    n = len(adj)
    return _mu(_induced(adj, ((1 << n) - 1) & ~(1 << v)))


def is_saturated_by_all_maximum_matchings(g: Graph, v: int) -> bool:
    """True when every maximum matching covers ``v``, i.e. ``mu(G - v) = mu(G) - 1``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    return _mu_without(g.adj, v) == _mu(g.adj) - 1


def gallai_edmonds(g: Graph) -> GEDecomposition:
    """Gallai-Edmonds partition ``(D, A, C)`` of ``V(G)``.

    ``D`` is found directly from its definition: ``v`` is in ``D`` exactly
    when deleting it leaves the matching number unchanged.

    Examples
    --------
    >>> from misbounds.graph import make_basic
    >>> ge = gallai_edmonds(make_basic("star", 4))
    >>> sorted(ge.D), sorted(ge.A), sorted(ge.C)
    ([1, 2, 3], [0], [])
    """
    mu = _mu(g.adj)
    d = 0
    for v in range(g.n):
        if _mu_without(g.adj, v) == mu:
            d |= 1 << v
    nd = 0
    for v in iter_bits(d):
        nd |= g.adj[v]
    a = nd & ~d
    c = g.full & ~(d | a)
    return GEDecomposition(VertexSet(d, g.n), VertexSet(a, g.n), VertexSet(c, g.n))


def is_factor_critical(g: Graph) -> bool:
    """True when ``g`` is connected and ``G - v`` has a perfect matching for every ``v``."""
    if g.n == 0 or g.n % 2 == 0 or len(component_masks(g.adj, g.full)) != 1:
        return False
    half = (g.n - 1) // 2
    return all(_mu_without(g.adj, v) == half for v in range(g.n))


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True when the subgraph induced by the covered vertices has only the edges of ``m``."""
    m = validate_matching(g, m)
    cover = matched_vertices(m)
    edges = sum((g.adj[v] & cover).bit_count() for v in iter_bits(cover)) // 2
    return edges == len(m)
