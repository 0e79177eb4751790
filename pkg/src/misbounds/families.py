"""Extremal graph families: constructors, recognizers and per-order enumeration.

Most families are recognized structurally, by a census of components or by
locating a centre vertex whose removal leaves a prescribed pattern.  The two
families built by "attach a new star to some neighbours of supported
vertices" (``Q3`` and ``Q4``) are recognized by enumerating every member of
the same order and comparing canonical certificates, which is why they carry
an order limit.

A few conventions that the constructors enforce:

* isolated-vertex counts (``r``, ``s``) may be zero, leaf counts (``ell``)
  must be positive;
* the two-centre class ``P_CLASS`` needs all three leaf classes non-empty,
  otherwise it does not have exactly four maximal independent sets;
* ``D_N`` allows the spider with zero legs, i.e. a single vertex plus a
  perfect matching.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from functools import lru_cache
from itertools import product

from .canon import are_isomorphic, certificate
from .graph import (
    Graph,
    VertexLike,
    _induced,
    _mask_of,
    component_masks,
    disjoint_union,
    from_edges,
    has_triangle,
    is_connected,
    iter_bits,
    make_basic,
)
from .matching import matching_number

__all__ = [
    "FamilyId",
    "FamilyOrderError",
    "GENERATE_AND_TEST_LIMIT",
    "make_general_extremal",
    "make_E",
    "make_A5",
    "make_L",
    "make_H7",
    "make_T",
    "make_M",
    "make_An",
    "make_Bn",
    "make_Dn",
    "make_P",
    "make_G",
    "make_Q3",
    "make_Q4",
    "attachment_choices",
    "recognize",
    "enumerate_family",
]

GENERATE_AND_TEST_LIMIT = 14


class FamilyId(enum.Enum):
    GENERAL_T1 = "GENERAL_T1"
    E_T = "E_T"
    H_T = "H_T"
    A5 = "A5"
    L_T = "L_T"
    M_T = "M_T"
    A_N = "A_N"
    B_N = "B_N"
    D_N = "D_N"
    H7 = "H7"
    T_ODD = "T_ODD"
    P_CLASS = "P_CLASS"
    G_T = "G_T"
    Q3 = "Q3"
    Q4 = "Q4"
    F_T = "F_T"


class FamilyOrderError(ValueError):
    """Order too large for a family recognized by generate-and-test."""


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check(name: str, x, minimum: int) -> None:
    _need(_is_int(x) and x >= minimum, f"{name} must be an integer >= {minimum}, got {x!r}")


# --------------------------------------------------------------------------
# building blocks


class _Builder:
    __slots__ = ("n", "edges")

    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def vertices(self, k: int) -> list[int]:
        return [self.vertex() for _ in range(k)]

    def edge(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def cycle(self, k: int) -> list[int]:
        vs = self.vertices(k)
        for i in range(k):
            self.edge(vs[i], vs[(i + 1) % k])
        return vs

    def leaves(self, centre: int, k: int) -> list[int]:
        vs = self.vertices(k)
        for x in vs:
            self.edge(centre, x)
        return vs

    def graph(self) -> Graph:
        return from_edges(self.n, self.edges)


def _k2s(k: int) -> Graph:
    b = _Builder()
    for _ in range(k):
        x, y = b.vertices(2)
        b.edge(x, y)
    return b.graph()


def _star(r: int) -> Graph:
    return make_basic("star", r + 1)


# --------------------------------------------------------------------------
# constructors


def make_general_extremal(t: int, r: int = 0) -> Graph:
    """``t`` disjoint triangles plus ``r`` isolated vertices."""
    _check("t", t, 0)
    _check("r", r, 0)
    _need(3 * t + r >= 1, "the graph must have at least one vertex")
    return disjoint_union([make_basic("complete", 3)] * t + [make_basic("empty", 1)] * r)


def make_E(t: int, ell: int = 1) -> Graph:
    """Centre vertex 0 joined to one vertex of each of ``t - 1`` triangles and
    to ``ell`` further leaves.

    Examples
    --------
    >>> g = make_E(2, 1)
    >>> g.n, g.number_of_edges()
    (5, 5)
    """
    _check("t", t, 2)
    _check("ell", ell, 1)
    b = _Builder()
    c = b.vertex()
    for _ in range(t - 1):
        tri = b.cycle(3)
        b.edge(c, tri[0])
    b.leaves(c, ell)
    return b.graph()


def make_L(t: int) -> Graph:
    """Like :func:`make_E` but without the extra leaves."""
    _check("t", t, 2)
    b = _Builder()
    c = b.vertex()
    for _ in range(t - 1):
        tri = b.cycle(3)
        b.edge(c, tri[0])
    return b.graph()


def make_A5() -> Graph:
    """Two triangles sharing vertex 0 (the bowtie)."""
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


# pentagon 0-2-3-4-5 with the pendant path 0-1-6
_H7_EDGES = [(0, 1), (0, 2), (0, 5), (1, 6), (2, 3), (3, 4), (4, 5)]


def make_H7() -> Graph:
    """The seven-vertex tree-plus-pentagon graph: a 5-cycle with a pendant
    path of length two hanging from one cycle vertex."""
    return from_edges(7, _H7_EDGES)


def make_T(r: int) -> Graph:
    """Spider with ``r`` legs of length two, centre 0; order ``2r + 1``."""
    _check("r", r, 0)
    b = _Builder()
    c = b.vertex()
    for _ in range(r):
        x, y = b.vertices(2)
        b.edge(c, x)
        b.edge(x, y)
    return b.graph()


def make_M(t: int, ell: int | None = None, r: int = 0) -> Graph:
    """Triangle-free extremal graph with matching number ``t``.

    Even ``t``: ``t/2`` pentagons plus ``r`` isolated vertices (``ell`` must
    be None).  Odd ``t``: a star with ``ell >= 1`` leaves, ``(t-1)/2``
    pentagons and ``r`` isolated vertices.
    """
    _check("t", t, 1)
    _check("r", r, 0)
    c5 = make_basic("cycle", 5)
    iso = [make_basic("empty", 1)] * r
    if t % 2 == 0:
        _need(ell is None, "even t takes no star; leave ell unset")
        return disjoint_union([c5] * (t // 2) + iso)
    _check("ell", ell, 1)
    return disjoint_union([_star(ell)] + [c5] * ((t - 1) // 2) + iso)


def make_An(n: int) -> Graph:
    """Perfect matching on ``n`` vertices, or a pentagon plus a perfect
    matching when ``n`` is odd."""
    _check("n", n, 2)
    if n % 2 == 0:
        return _k2s(n // 2)
    _need(n >= 5, f"odd n must be >= 5, got {n}")
    return disjoint_union([make_basic("cycle", 5), _k2s((n - 5) // 2)])


def make_Bn(n: int) -> Graph:
    """Two pentagons plus a perfect matching; ``n`` even, at least 10."""
    _check("n", n, 10)
    _need(n % 2 == 0, f"n must be even, got {n}")
    c5 = make_basic("cycle", 5)
    return disjoint_union([c5, c5, _k2s((n - 10) // 2)])


def make_Dn(n: int, variant: str = "T", r: int | None = None) -> Graph:
    """``H7`` or the spider with ``r`` legs, plus a perfect matching on the
    remaining vertices; ``n`` odd."""
    _check("n", n, 1)
    _need(n % 2 == 1, f"n must be odd, got {n}")
    if variant == "H7":
        _need(n >= 7, f"the H7 variant needs n >= 7, got {n}")
        _need(r is None, "the H7 variant takes no r")
        return disjoint_union([make_H7(), _k2s((n - 7) // 2)])
    _need(variant == "T", f"variant must be 'H7' or 'T', got {variant!r}")
    _check("r", r, 0)
    _need(2 * r + 1 <= n, f"r must be <= (n-1)/2 = {(n - 1) // 2}, got {r}")
    return disjoint_union([make_T(r), _k2s((n - 2 * r - 1) // 2)])


def make_P(l1: int, l2: int, l3: int) -> Graph:
    """Non-adjacent centres ``u = 0`` and ``v = 1`` with ``l1`` leaves on
    ``u``, ``l2`` leaves on ``v`` and ``l3`` common neighbours.

    Examples
    --------
    >>> make_P(1, 1, 1).degrees()
    [2, 2, 1, 1, 2]
    """
    _check("l1", l1, 1)
    _check("l2", l2, 1)
    _check("l3", l3, 1)
    b = _Builder()
    u, v = b.vertices(2)
    b.leaves(u, l1)
    b.leaves(v, l2)
    for x in b.vertices(l3):
        b.edge(u, x)
        b.edge(v, x)
    return b.graph()


def make_G(t: int, *, r: int = 1, ell: tuple[int, int, int] = (1, 1, 1)) -> Graph:
    """Connected triangle-free extremal graph built around one hub.

    Odd ``t``: a star with ``r`` leaves whose centre (vertex 0) is also
    joined to one vertex of each of ``(t-1)/2`` pentagons.  Even ``t``: the
    two-centre graph ``make_P(*ell)`` with one vertex of each of ``(t-2)/2``
    pentagons joined to its first centre.
    """
    _check("t", t, 1)
    if t % 2 == 1:
        _check("r", r, 1)
        hub = _star(r)
        k = (t - 1) // 2
    else:
        _need(len(ell) == 3, "ell must be a triple")
        hub = make_P(*ell)
        k = (t - 2) // 2
    b = _Builder()
    b.vertices(hub.n)
    b.edges.extend(hub.edges())
    for _ in range(k):
        cyc = b.cycle(5)
        b.edge(0, cyc[0])
    return b.graph()


# --------------------------------------------------------------------------
# attaching a new star


def _supported(g: Graph) -> tuple[int, int]:
    """Bitmasks of (leaves, supported vertices)."""
    leaves = g.leaves()
    sup = 0
    for v in range(g.n):
        if not leaves >> v & 1 and g.adj[v] & leaves:
            sup |= 1 << v
    return leaves, sup


def attachment_choices(base: Graph) -> Iterator[int]:
    """Non-empty sets of neighbours of supported vertices, one per orbit of
    twin swaps, that leave every supported vertex with a private leaf.

    Vertices with identical neighbourhoods are interchangeable, so a choice
    is determined by how many of each such class are taken.
    """
    leaves, sup = _supported(base)
    pool = 0
    for s in iter_bits(sup):
        pool |= base.adj[s]
    classes: dict[int, list[int]] = {}
    for x in iter_bits(pool):
        classes.setdefault(base.adj[x], []).append(x)
    groups = []
    for nbhd, members in sorted(classes.items(), key=lambda kv: kv[1][0]):
        # all leaves of one supported vertex form a single class
        cap = len(members) - 1 if leaves >> members[0] & 1 else len(members)
        groups.append((members, cap))
    for counts in product(*(range(cap + 1) for _, cap in groups)):
        mask = 0
        for (members, _), k in zip(groups, counts):
            for x in members[:k]:
                mask |= 1 << x
        if mask:
            yield mask


def _attach_star(base: Graph, star_size: int, attach: int) -> Graph:
    b = _Builder()
    b.vertices(base.n)
    b.edges.extend(base.edges())
    w = b.vertex()
    b.leaves(w, star_size)
    for x in iter_bits(attach):
        b.edge(w, x)
    return b.graph()


def _make_attached(base: Graph, star_size: int, attach: VertexLike) -> Graph:
    _check("star_size", star_size, 1)
    mask = _mask_of(attach, base.n)
    leaves, sup = _supported(base)
    pool = 0
    for s in iter_bits(sup):
        pool |= base.adj[s]
    _need(mask != 0, "attach must be non-empty")
    _need(not mask & ~pool, "attach may only contain neighbours of supported vertices")
    for s in iter_bits(sup):
        _need(base.adj[s] & leaves & ~mask != 0, f"attach leaves supported vertex {s} without a leaf")
    g = _attach_star(base, star_size, mask)
    _need(is_connected(g), "the resulting graph is disconnected")
    _need(not has_triangle(g.adj), "the resulting graph has a triangle")
    return g


def _star_components(g: Graph, k: int) -> bool:
    comps = component_masks(g.adj, g.full)
    return len(comps) == k and all(_is_star(g.adj, c) and c.bit_count() >= 3 for c in comps)


def _is_q3_base(g: Graph) -> bool:
    return _p_class(g) or _star_components(g, 2)


def _is_q4_base(g: Graph) -> bool:
    if _star_components(g, 3):
        return True
    comps = component_masks(g.adj, g.full)
    if len(comps) == 2:
        for a, b in (comps, comps[::-1]):
            if _is_star(g.adj, b) and b.bit_count() >= 3 and _p_class(_sub(g, a)):
                return True
        return False
    return recognize(g, FamilyId.Q3)


def make_Q3(base: Graph, star_size: int, attach: VertexLike) -> Graph:
    """New star centre ``w`` (vertex ``base.n``) with ``star_size`` leaves,
    joined to the vertices ``attach`` of ``base``.

    ``base`` must be a two-centre graph from :func:`make_P` or two stars with
    at least two leaves each.  ``attach`` must consist of neighbours of
    supported vertices and leave each supported vertex with a private leaf.
    """
    _need(_is_q3_base(base), "base must be a two-centre graph or two stars with >= 2 leaves each")
    return _make_attached(base, star_size, attach)


def make_Q4(base: Graph, star_size: int, attach: VertexLike) -> Graph:
    """As :func:`make_Q3`, one level up: ``base`` is a ``Q3`` member, a
    two-centre graph plus a star with >= 2 leaves, or three such stars."""
    _need(_is_q4_base(base), "base must be a Q3 member, a two-centre graph plus a star, or three stars")
    return _make_attached(base, star_size, attach)


# --------------------------------------------------------------------------
# structural recognition


def _sub(g: Graph, mask: int) -> Graph:
    rows = _induced(g.adj, mask)
    return Graph(len(rows), rows, check=False)


def _deg_in(adj, v: int, mask: int) -> int:
    return (adj[v] & mask).bit_count()


def _is_k1(adj, comp: int) -> bool:
    return comp.bit_count() == 1


def _is_k2(adj, comp: int) -> bool:
    return comp.bit_count() == 2


def _is_k3(adj, comp: int) -> bool:
    return comp.bit_count() == 3 and all(_deg_in(adj, v, comp) == 2 for v in iter_bits(comp))


def _is_c5(adj, comp: int) -> bool:
    # comp is assumed connected
    return comp.bit_count() == 5 and all(_deg_in(adj, v, comp) == 2 for v in iter_bits(comp))


def _is_star(adj, comp: int) -> bool:
    """``K_{1,k}`` with ``k >= 1``; comp is assumed connected."""
    k = comp.bit_count()
    if k < 2:
        return False
    if k == 2:
        return True
    degs = sorted(_deg_in(adj, v, comp) for v in iter_bits(comp))
    return degs[-1] == k - 1 and degs[-2] == 1


def _is_spider(adj, comp: int) -> bool:
    k = comp.bit_count()
    if k % 2 == 0:
        return False
    if k == 1:
        return True
    legs = (k - 1) // 2
    if sum(_deg_in(adj, v, comp) for v in iter_bits(comp)) != 2 * (k - 1):
        return False
    for c in iter_bits(comp):
        if _deg_in(adj, c, comp) != legs:
            continue
        rest = comp & ~(1 << c)
        parts = component_masks(adj, rest)
        if len(parts) == legs and all(p.bit_count() == 2 and (adj[c] & p).bit_count() == 1 for p in parts):
            return True
    return False


def _census(g: Graph) -> list[int]:
    return component_masks(g.adj, g.full)


def _general_t1(g: Graph) -> int | None:
    t = 0
    for c in _census(g):
        if _is_k3(g.adj, c):
            t += 1
        elif not _is_k1(g.adj, c):
            return None
    return t


def _hub_split(g: Graph, c: int) -> list[int]:
    return component_masks(g.adj, g.full & ~(1 << c))


def _triangle_hub(g: Graph, want_leaves: bool) -> int | None:
    """``t`` if some centre has only triangles (each met once) and, when
    ``want_leaves``, at least one leaf; otherwise no leaves at all."""
    if g.n < 4 or not is_connected(g):
        return None
    for c in range(g.n):
        tris = leaves = 0
        for p in _hub_split(g, c):
            if p.bit_count() == 1:
                leaves += 1
            elif _is_k3(g.adj, p) and (g.adj[c] & p).bit_count() == 1:
                tris += 1
            else:
                break
        else:
            if tris >= 1 and (leaves >= 1) == want_leaves:
                return tris + 1
    return None


def _h_family(g: Graph) -> int | None:
    if g.n == 3 and g.number_of_edges() == 3:
        return 1
    if g.n == 5 and any(are_isomorphic(g, h) for h in _H2_SPECIAL()):
        return 2
    return _triangle_hub(g, True)


@lru_cache(maxsize=None)
def _H2_SPECIAL() -> tuple[Graph, ...]:
    return (make_A5(), make_basic("cycle", 5), make_basic("complete", 5))


def _m_family(g: Graph) -> int | None:
    c5 = stars = 0
    for c in _census(g):
        if _is_c5(g.adj, c):
            c5 += 1
        elif _is_star(g.adj, c):
            stars += 1
        elif not _is_k1(g.adj, c):
            return None
    if stars > 1:
        return None
    t = 2 * c5 + stars
    return t if t >= 1 else None


def _a_n(g: Graph) -> bool:
    comps = _census(g)
    c5 = sum(1 for c in comps if _is_c5(g.adj, c))
    k2 = sum(1 for c in comps if _is_k2(g.adj, c))
    if c5 + k2 != len(comps) or g.n < 2:
        return False
    return c5 == g.n % 2


def _b_n(g: Graph) -> bool:
    comps = _census(g)
    c5 = sum(1 for c in comps if _is_c5(g.adj, c))
    k2 = sum(1 for c in comps if _is_k2(g.adj, c))
    return c5 == 2 and c5 + k2 == len(comps)


def _is_h7(g: Graph, comp: int | None = None) -> bool:
    h = g if comp is None else _sub(g, comp)
    return h.n == 7 and h.number_of_edges() == 7 and are_isomorphic(h, _H7())


@lru_cache(maxsize=None)
def _H7() -> Graph:
    return make_H7()


def _d_n(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    special = [c for c in _census(g) if not _is_k2(g.adj, c)]
    if len(special) != 1:
        return False
    c = special[0]
    return _is_spider(g.adj, c) or _is_h7(g, c)


def _p_class(g: Graph) -> bool:
    if g.n < 5 or not is_connected(g):
        return False
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] >> v & 1:
                continue
            pu, pv = 1 << u, 1 << v
            counts = [0, 0, 0]
            for x in range(g.n):
                if x == u or x == v:
                    continue
                nb = adj[x]
                if nb == pu:
                    counts[0] += 1
                elif nb == pv:
                    counts[1] += 1
                elif nb == pu | pv:
                    counts[2] += 1
                else:
                    break
            else:
                if min(counts) >= 1:
                    return True
    return False


def _g_family(g: Graph) -> int | None:
    """``t`` when ``g`` is a single-hub graph with pentagons hanging off it."""
    if g.n < 2 or not is_connected(g):
        return None
    adj = g.adj
    for h in range(g.n):
        c5 = leaves = 0
        other = []
        for p in _hub_split(g, h):
            if p.bit_count() == 1:
                leaves += 1
            elif _is_c5(adj, p) and (adj[h] & p).bit_count() == 1:
                c5 += 1
            else:
                other.append(p)
        if not other:
            if leaves >= 1:
                return 2 * c5 + 1
            continue
        if len(other) != 1 or leaves < 1:
            continue
        p = other[0]
        # the second centre with its private and shared leaves
        if not _is_star(adj, p) or p.bit_count() < 3:
            continue
        centre = next(v for v in iter_bits(p) if _deg_in(adj, v, p) == p.bit_count() - 1)
        if adj[h] >> centre & 1:
            continue
        star_leaves = p & ~(1 << centre)
        shared = adj[h] & star_leaves
        if shared and star_leaves & ~shared:
            return 2 * c5 + 2
    return None


def _star_graph(g: Graph) -> bool:
    return g.n >= 2 and is_connected(g) and _is_star(g.adj, g.full)


# --------------------------------------------------------------------------
# enumeration


def _dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        seen.setdefault(certificate(g), g)
    return list(seen.values())


def _triples(total: int) -> Iterator[tuple[int, int, int]]:
    for l1 in range(1, total - 1):
        for l2 in range(1, total - l1):
            yield l1, l2, total - l1 - l2


def _star_tuples(total_leaves: int, k: int, minimum: int = 2) -> Iterator[tuple[int, ...]]:
    """Non-decreasing ``k``-tuples of leaf counts >= minimum summing to total."""
    def rec(remaining, parts, lo):
        if parts == 0:
            if remaining == 0:
                yield ()
            return
        for x in range(lo, remaining + 1):
            for rest in rec(remaining - x, parts - 1, x):
                yield (x,) + rest
    yield from rec(total_leaves, k, minimum)


def _p_members(n: int) -> list[Graph]:
    return [make_P(*tr) for tr in _triples(n - 2)] if n >= 5 else []


def _attached_members(bases: Iterable[Graph], n: int) -> Iterator[Graph]:
    for base in bases:
        s = n - base.n - 1
        if s < 1:
            continue
        for mask in attachment_choices(base):
            g = _attach_star(base, s, mask)
            if is_connected(g) and not has_triangle(g.adj):
                yield g


def _q3_bases(p: int) -> Iterator[Graph]:
    yield from _p_members(p)
    for r1, r2 in _star_tuples(p - 2, 2):
        yield disjoint_union([_star(r1), _star(r2)])


def _q4_bases(p: int) -> Iterator[Graph]:
    yield from _family_members(FamilyId.Q3, p)
    for r in range(2, p - 5):
        for f in _p_members(p - r - 1):
            yield disjoint_union([f, _star(r)])
    for rs in _star_tuples(p - 3, 3):
        yield disjoint_union([_star(x) for x in rs])


def _limit(family: FamilyId, n: int) -> None:
    if n > GENERATE_AND_TEST_LIMIT:
        raise FamilyOrderError(
            f"{family.value} is recognized by enumeration; order {n} exceeds {GENERATE_AND_TEST_LIMIT}"
        )


@lru_cache(maxsize=None)
def _family_members(family: FamilyId, n: int, t: int | None = None) -> tuple[Graph, ...]:
    return tuple(_dedupe(_raw_members(family, n, t)))


def _want(t: int | None, value: int) -> bool:
    return t is None or t == value


def _raw_members(family: FamilyId, n: int, t: int | None) -> Iterator[Graph]:
    F = FamilyId
    if family is F.GENERAL_T1:
        for k in range(n // 3 + 1):
            if _want(t, k):
                yield make_general_extremal(k, n - 3 * k)
    elif family in (F.E_T, F.L_T):
        for k in range(2, (n - 1) // 3 + 2):
            ell = n - 3 * (k - 1) - 1
            if not _want(t, k):
                continue
            if family is F.E_T and ell >= 1:
                yield make_E(k, ell)
            elif family is F.L_T and ell == 0:
                yield make_L(k)
    elif family is F.H_T:
        if n == 3 and _want(t, 1):
            yield make_basic("complete", 3)
        if n == 5 and _want(t, 2):
            yield from _H2_SPECIAL()
        yield from _raw_members(F.E_T, n, t)
    elif family is F.A5:
        if n == 5:
            yield make_A5()
    elif family is F.H7:
        if n == 7:
            yield make_H7()
    elif family is F.M_T:
        for pent in range(n // 5 + 1):
            rest = n - 5 * pent
            if pent and _want(t, 2 * pent):
                yield make_M(2 * pent, None, rest)
            if _want(t, 2 * pent + 1):
                for ell in range(1, rest):
                    yield make_M(2 * pent + 1, ell, rest - ell - 1)
    elif family is F.A_N:
        if n >= 2 and n != 3:
            yield make_An(n)
    elif family is F.B_N:
        if n >= 10 and n % 2 == 0:
            yield make_Bn(n)
    elif family is F.D_N:
        if n % 2 == 1:
            if n >= 7:
                yield make_Dn(n, "H7")
            for r in range((n - 1) // 2 + 1):
                yield make_Dn(n, "T", r)
    elif family is F.T_ODD:
        if n % 2 == 1:
            yield make_T((n - 1) // 2)
    elif family is F.P_CLASS:
        yield from _p_members(n)
    elif family is F.G_T:
        for k in range(0, n // 5 + 1):
            rest = n - 5 * k
            if _want(t, 2 * k + 1) and rest >= 2:
                yield make_G(2 * k + 1, r=rest - 1)
            if _want(t, 2 * k + 2) and rest >= 5:
                for tr in _triples(rest - 2):
                    yield make_G(2 * k + 2, ell=tr)
    elif family is F.Q3:
        if _want(t, 3):
            _limit(family, n)
            for p in range(5, n - 1):
                yield from _attached_members(_q3_bases(p), n)
    elif family is F.Q4:
        if _want(t, 4):
            _limit(family, n)
            for p in range(7, n - 1):
                yield from _attached_members(_q4_bases(p), n)
    elif family is F.F_T:
        if n >= 2 and _want(t, 1):
            yield _star(n - 1)
        if n == 5 and _want(t, 2):
            yield make_basic("cycle", 5)
        if t is None or t >= 3:
            yield from (g for g in _raw_members(F.G_T, n, t) if matching_number(g) >= 3)
        if _want(t, 3) and n >= 7:
            yield from _family_members(F.Q3, n)
        if _want(t, 4) and n >= 9:
            yield from _family_members(F.Q4, n)
    else:  # pragma: no cover
        raise ValueError(f"unknown family {family!r}")


def enumerate_family(family: FamilyId | str, n: int, t: int | None = None) -> Iterator[Graph]:
    """One representative per isomorphism class of family members of order ``n``.

    Parameters
    ----------
    family : FamilyId or str
    n : int
        Exact order.
    t : int, optional
        Restrict parameterised families to matching number ``t``.

    Raises
    ------
    FamilyOrderError
        For ``Q3``/``Q4`` (directly or through ``F_T``) above order 14.

    Examples
    --------
    >>> [g.n for g in enumerate_family("P_CLASS", 5)]
    [5]
    >>> len(list(enumerate_family("H_T", 5, t=2)))
    4
    """
    family = FamilyId(family)
    _check("n", n, 1)
    yield from _family_members(family, n, t)


# --------------------------------------------------------------------------
# recognition


@lru_cache(maxsize=None)
def _certificates(family: FamilyId, n: int) -> frozenset[bytes]:
    return frozenset(certificate(g) for g in _family_members(family, n))


def _in_enumerated(g: Graph, family: FamilyId) -> bool:
    _limit(family, g.n)
    return certificate(g) in _certificates(family, g.n)


def _parameter(g: Graph, family: FamilyId, t: int | None) -> int | None:
    """The family parameter of ``g`` (its matching number), or None when ``g``
    is not a member."""
    F = FamilyId
    if family is F.GENERAL_T1:
        return _general_t1(g)
    if family is F.E_T:
        return _triangle_hub(g, True)
    if family is F.L_T:
        return _triangle_hub(g, False)
    if family is F.H_T:
        return _h_family(g)
    if family is F.M_T:
        return _m_family(g)
    if family is F.G_T:
        return _g_family(g)
    if family in (F.Q3, F.Q4):
        want = 3 if family is F.Q3 else 4
        if t is not None and t != want:
            return None
        if g.n < (7 if want == 3 else 9) or not is_connected(g) or matching_number(g) != want:
            return None
        return want if _in_enumerated(g, family) else None
    if family is F.F_T:
        if _star_graph(g):
            return 1
        if g.n == 5 and _is_c5(g.adj, g.full):
            return 2
        k = _g_family(g)
        if k is not None and k >= 3:
            return k
        for fam, want in ((F.Q3, 3), (F.Q4, 4)):
            if _want(t, want) and _parameter(g, fam, want) == want:
                return want
        return None
    raise ValueError(f"{family.value} has no matching-number parameter")


_PARAMETERISED = {
    FamilyId.GENERAL_T1, FamilyId.E_T, FamilyId.L_T, FamilyId.H_T, FamilyId.M_T,
    FamilyId.G_T, FamilyId.Q3, FamilyId.Q4, FamilyId.F_T,
}


def recognize(g: Graph, family: FamilyId | str, t: int | None = None) -> bool:
    """True when ``g`` is isomorphic to a member of ``family``.

    For families indexed by matching number, ``t`` restricts membership to
    that index; otherwise any index is accepted.  ``A_N``, ``B_N`` and
    ``D_N`` use the order of ``g``.

    Raises
    ------
    FamilyOrderError
        When deciding requires enumerating ``Q3``/``Q4`` members above order 14.

    Examples
    --------
    >>> from misbounds.graph import make_basic
    >>> recognize(make_basic("cycle", 5), "M_T", t=2)
    True
    >>> recognize(make_basic("cycle", 5), "E_T")
    False
    """
    family = FamilyId(family)
    F = FamilyId
    if family in _PARAMETERISED:
        k = _parameter(g, family, t)
        return k is not None and _want(t, k)
    if family is F.A5:
        return g.n == 5 and are_isomorphic(g, _H2_SPECIAL()[0])
    if family is F.H7:
        return _is_h7(g)
    if family is F.T_ODD:
        return g.n % 2 == 1 and is_connected(g) and _is_spider(g.adj, g.full)
    if family is F.A_N:
        return _a_n(g)
    if family is F.B_N:
        return _b_n(g)
    if family is F.D_N:
        return _d_n(g)
    if family is F.P_CLASS:
        return _p_class(g)
    raise ValueError(f"unknown family {family!r}")  # pragma: no cover
