"""Canonical labelling and isomorphism testing for small graphs.

The search is the usual individualisation-refinement scheme: refine an
ordered partition to an equitable one, individualise each vertex of the first
non-singleton cell in turn, and take the lexicographically smallest relabelled
adjacency code over all leaves.  Automorphisms discovered at equal leaves are
used to prune sibling branches and to jump back up the tree, which keeps
highly symmetric graphs (complete graphs, stars, spiders) cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, iter_bits, to_graph6

__all__ = [
    "CanonicalForm",
    "canonical_form",
    "certificate",
    "are_isomorphic",
    "automorphism_generators",
    "vertex_orbits",
    "refine",
]


@dataclass(frozen=True)
class CanonicalForm:
    """``certificate`` is equal for two graphs iff they are isomorphic;
    ``labeling[v]`` is the canonical label given to vertex ``v``."""

    certificate: bytes
    labeling: tuple[int, ...]


def degree_partition(adj, mask: int | None = None) -> list[int]:
    """Cells of equal degree, ordered by increasing degree."""
    n = len(adj)
    buckets: dict[int, int] = {}
    for v in range(n) if mask is None else iter_bits(mask):
        d = adj[v].bit_count()
        buckets[d] = buckets.get(d, 0) | (1 << v)
    return [buckets[d] for d in sorted(buckets)]


def refine(adj, cells: list[int], splitters: list[int] | None = None) -> list[int]:
    """Refine the ordered partition ``cells`` to the coarsest equitable one.

    Each split replaces a cell, in place, by its fragments ordered by the
    number of neighbours in the splitter, so the result is invariant under
    relabelling.  ``splitters`` defaults to every cell.
    """
    n = len(adj)
    cells = list(cells)
    queue = list(cells if splitters is None else splitters)
    while queue and len(cells) < n:
        w = queue.pop(0)
        out = []
        for c in cells:
            if c & (c - 1):
                groups: dict[int, int] = {}
                for v in iter_bits(c):
                    k = (adj[v] & w).bit_count()
                    groups[k] = groups.get(k, 0) | (1 << v)
                if len(groups) > 1:
                    frags = [groups[k] for k in sorted(groups)]
                    out.extend(frags)
                    if c in queue:
                        i = queue.index(c)
                        queue[i : i + 1] = frags
                    else:
                        # stability w.r.t. c is inherited, so one fragment can be dropped
                        big = max(range(len(frags)), key=lambda i: frags[i].bit_count())
                        queue.extend(f for i, f in enumerate(frags) if i != big)
                    continue
            out.append(c)
        cells = out
    return cells


def _code(adj, order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(adj)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << pos[u]
        code.append(row)
    return tuple(code)


def _orbit_roots(n: int, gens: list[list[int]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    __slots__ = ("adj", "n", "first_order", "first_prefix", "first_code",
                 "best_order", "best_prefix", "best_code", "gens")

    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first_code = None
        self.best_code = None
        self.gens: list[list[int]] = []

    def _leaf(self, cells: list[int], prefix: list[int]):
        order = [c.bit_length() - 1 for c in cells]
        code = _code(self.adj, order)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_order = self.best_order = order
            self.first_prefix = self.best_prefix = list(prefix)
            return None
        if code == self.first_code:
            ref_order, ref_prefix = self.first_order, self.first_prefix
        elif code == self.best_code:
            ref_order, ref_prefix = self.best_order, self.best_prefix
        else:
            if code < self.best_code:
                self.best_code, self.best_order, self.best_prefix = code, order, list(prefix)
            return None
        gamma = [0] * self.n
        for a, b in zip(ref_order, order):
            gamma[a] = b
        self.gens.append(gamma)
        k = 0
        while k < len(prefix) and k < len(ref_prefix) and prefix[k] == ref_prefix[k]:
            k += 1
        return k

    def visit(self, cells: list[int], prefix: list[int]):
        if len(cells) == self.n:
            return self._leaf(cells, prefix)
        depth = len(prefix)
        for idx, target in enumerate(cells):
            if target & (target - 1):
                break
        explored: list[int] = []
        for v in iter_bits(target):
            if explored:
                fixing = [g for g in self.gens if all(g[p] == p for p in prefix)]
                if fixing:
                    roots = _orbit_roots(self.n, fixing)
                    if any(roots[v] == roots[w] for w in explored):
                        continue
            bit = 1 << v
            child = cells[:idx] + [bit, target ^ bit] + cells[idx + 1:]
            child = refine(self.adj, child, [bit])
            prefix.append(v)
            r = self.visit(child, prefix)
            prefix.pop()
            explored.append(v)
            if r is not None and r < depth:
                return r
        return None


def _search(adj, cells: list[int]) -> _Search:
    s = _Search(adj)
    s.visit(refine(adj, cells), [])
    return s


def canonical_code(adj, cells: list[int] | None = None):
    """Return ``(code, order, generators)`` for the (optionally coloured) graph.

    ``code`` is a tuple of relabelled adjacency rows, hashable and equal for
    isomorphic inputs with matching colour classes; ``order[i]`` is the vertex
    placed at canonical position ``i``.
    """
    if not adj:
        return (), [], []
    s = _search(adj, degree_partition(adj) if cells is None else cells)
    return s.best_code, s.best_order, s.gens


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical certificate and labelling of ``g``.

    The certificate is the graph6 encoding of the canonically relabelled
    graph, so it doubles as a readable representative of the isomorphism
    class.

    Examples
    --------
    >>> from misbounds.graph import make_basic, relabel
    >>> c5 = make_basic("cycle", 5)
    >>> canonical_form(c5).certificate == canonical_form(relabel(c5, [0, 2, 4, 1, 3])).certificate
    True
    """
    if g.n == 0:
        return CanonicalForm(b"", ())
    code, order, _ = canonical_code(g.adj)
    labeling = [0] * g.n
    for i, v in enumerate(order):
        labeling[v] = i
    return CanonicalForm(to_graph6(Graph(g.n, code, check=False)).encode(), tuple(labeling))


def certificate(g: Graph) -> bytes:
    return canonical_form(g).certificate


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.number_of_edges() != h.number_of_edges():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g.adj)[0] == canonical_code(h.adj)[0]


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Automorphisms found during the canonical search; they generate Aut(g)."""
    return [tuple(p) for p in canonical_code(g.adj)[2]]


def vertex_orbits(g: Graph) -> list[int]:
    """``orbits[v]`` is the smallest vertex in the Aut(g)-orbit of ``v``."""
    return _orbit_roots(g.n, [list(p) for p in automorphism_generators(g)])
