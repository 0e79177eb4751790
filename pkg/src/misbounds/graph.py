"""Immutable bitset graphs, vertex sets, graph6 I/O and basic constructions.

Vertices are the integers ``0 .. n-1`` and every adjacency row is a Python
int used as a bitset, so neighbourhood queries and set intersections are
single word operations for the orders this package targets (n <= 64).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from typing import Union

__all__ = [
    "MAX_ORDER",
    "Graph",
    "VertexSet",
    "GraphFormatError",
    "parse_graph6",
    "to_graph6",
    "read_graph6",
    "make_basic",
    "from_edges",
    "disjoint_union",
    "induced_subgraph",
    "delete_vertices",
    "add_pendant_vertices",
    "relabel",
    "neighborhood",
    "components",
    "is_connected",
    "is_triangle_free",
    "iter_bits",
]

MAX_ORDER = 64


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input; ``offset`` is the failing byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """A subset of the vertices ``0 .. n-1`` of some host graph.

    Stored as a bitmask.  Iteration is in increasing vertex order.
    """

    __slots__ = ("bits", "n")

    def __init__(self, bits: int, n: int):
        if bits < 0 or bits >> n:
            raise ValueError(f"bits {bits:#x} outside vertex range 0..{n - 1}")
        self.bits = bits
        self.n = n

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> VertexSet:
        return cls(_mask_of(vertices, n), n)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits and self.n == other.n
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.bits, self.n))

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.bits & ~other.bits, self.n)

    def complement(self) -> VertexSet:
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def __repr__(self) -> str:
        return "VertexSet({" + ", ".join(map(str, self)) + "})"


VertexLike = Union[VertexSet, Iterable[int]]


def _mask_of(s: VertexLike, n: int) -> int:
    if isinstance(s, VertexSet):
        if s.bits >> n:
            raise ValueError(f"vertex set {s!r} not contained in 0..{n - 1}")
        return s.bits
    mask = 0
    for v in s:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for order {n}")
        mask |= 1 << v
    return mask


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    ``adj[v]`` is the neighbourhood bitmask of ``v``.  Instances are
    immutable and hashable; two graphs compare equal when they are equal as
    labelled graphs (use :func:`misbounds.canon.are_isomorphic` for
    isomorphism).
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int], *, check: bool = True):
        adj = tuple(adj)
        if check:
            if not 0 <= n <= MAX_ORDER:
                raise ValueError(f"order {n} outside 0..{MAX_ORDER}")
            if len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            for v, row in enumerate(adj):
                if row < 0 or row >> n:
                    raise ValueError(f"row {v} has bits outside 0..{n - 1}")
                if row >> v & 1:
                    raise ValueError(f"self-loop at vertex {v}")
                for u in iter_bits(row):
                    if not adj[u] >> v & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @property
    def full(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def vertices(self) -> VertexSet:
        return VertexSet(self.full, self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> u + 1 << u + 1)]

    def number_of_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def leaves(self) -> int:
        """Bitmask of degree-one vertices."""
        return sum(1 << v for v, row in enumerate(self.adj) if row and row & (row - 1) == 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self) -> str:
        if self.n <= 62:
            return f"Graph({to_graph6(self)!r}, n={self.n})"
        return f"Graph(n={self.n}, m={self.number_of_edges()})"

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.adj), None)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order ``n`` from an edge list."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, check=False)


# --------------------------------------------------------------------------
# graph6


def _decode_order(data: bytes) -> tuple[int, int]:
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    for i, c in enumerate(data[:4]):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {chr(c)!r} outside graph6 range", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        # 8-byte form is for n >= 258048, far beyond MAX_ORDER
        raise GraphFormatError(f"order exceeds {MAX_ORDER}", 0)
    if len(data) < 4:
        raise GraphFormatError("truncated long-form order header", len(data))
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and trailing whitespace are ignored.

    Raises
    ------
    GraphFormatError
        On bad characters, wrong length, trailing garbage, or an order of 0
        or above 64.

    Examples
    --------
    >>> parse_graph6("Bw").edges()
    [(0, 1), (0, 2), (1, 2)]
    """
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n \t")
    skip = 0
    if data.startswith(b">>graph6<<"):
        skip = 10
        data = data[10:]
    n, pos = _decode_order(data)
    if n == 0:
        raise GraphFormatError("graph of order 0 is not accepted", skip)
    if n > MAX_ORDER:
        raise GraphFormatError(f"order {n} exceeds {MAX_ORDER}", skip)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    for i, c in enumerate(body):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"character {chr(c)!r} outside graph6 range", skip + pos + i)
    if len(body) < nbytes:
        raise GraphFormatError(f"expected {nbytes} edge bytes, got {len(body)}", skip + len(data))
    if len(body) > nbytes:
        raise GraphFormatError("trailing characters after edge data", skip + pos + nbytes)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, check=False)


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline).

    Orders up to 62 use the one-byte size prefix, 63 and 64 the long form.

    Examples
    --------
    >>> to_graph6(make_basic("complete", 3))
    'Bw'
    """
    n = g.n
    if n == 0:
        raise ValueError("graph of order 0 has no graph6 encoding here")
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    adj = g.adj
    acc = 0
    k = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            k += 1
            if k == 6:
                out.append(chr(acc + 63))
                acc = k = 0
    if k:
        out.append(chr((acc << (6 - k)) + 63))
    return "".join(out)


def read_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank ones."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# --------------------------------------------------------------------------
# constructions


def make_basic(kind: str, n: int) -> Graph:
    """Complete graph, cycle, path, star (centre 0) or edgeless graph on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"{kind} needs n >= 1, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}")
    full = (1 << n) - 1
    if kind == "complete":
        return Graph(n, [full & ~(1 << v) for v in range(n)], check=False)
    if kind == "cycle":
        if n < 3:
            raise ValueError(f"cycle needs n >= 3, got {n}")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        return from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "empty":
        return Graph(n, [0] * n, check=False)
    raise ValueError(f"unknown graph kind {kind!r}")


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    """Block-diagonal union; the vertices of ``gs[k]`` follow those of ``gs[k-1]``."""
    adj: list[int] = []
    offset = 0
    for g in gs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    if offset > MAX_ORDER:
        raise ValueError(f"union has order {offset} > {MAX_ORDER}")
    return Graph(offset, adj, check=False)


def _induced(adj: tuple[int, ...], mask: int) -> tuple[int, ...]:
    verts = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in iter_bits(adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return tuple(rows)


def induced_subgraph(g: Graph, s: VertexLike) -> Graph:
    """``G[S]``; vertex ``i`` of the result is the i-th smallest member of ``s``."""
    mask = _mask_of(s, g.n)
    if mask == g.full:
        return g
    rows = _induced(g.adj, mask)
    return Graph(len(rows), rows, check=False)


def delete_vertices(g: Graph, s: VertexLike) -> Graph:
    """``G - S``."""
    return induced_subgraph(g, VertexSet(g.full & ~_mask_of(s, g.n), g.n))


def add_pendant_vertices(g: Graph, v: int, k: int) -> Graph:
    """Attach ``k`` new leaves (labelled ``n, n+1, ...``) to vertex ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    n = g.n + k
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}")
    new = ((1 << k) - 1) << g.n
    adj = list(g.adj) + [1 << v] * k
    adj[v] |= new
    return Graph(n, adj, check=False)


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertices")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        image = 0
        for u in iter_bits(row):
            image |= 1 << perm[u]
        adj[perm[v]] = image
    return Graph(g.n, adj, check=False)


# --------------------------------------------------------------------------
# queries


def neighborhood(g: Graph, v: int, closed: bool = False) -> VertexSet:
    """Open (``N(v)``) or closed (``N[v]``) neighbourhood of ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")
    bits = g.adj[v] | (1 << v) if closed else g.adj[v]
    return VertexSet(bits, g.n)


def component_masks(adj: tuple[int, ...] | list[int], mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitmasks,
    ordered by smallest vertex."""
    comps = []
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        mask &= ~comp
    return comps


def components(g: Graph) -> list[VertexSet]:
    return [VertexSet(c, g.n) for c in component_masks(g.adj, g.full)]


def is_connected(g: Graph) -> bool:
    """True for a single component; the order-0 graph is not connected."""
    if g.n == 0:
        return False
    return len(component_masks(g.adj, g.full)) == 1


def has_triangle(adj: tuple[int, ...] | list[int]) -> bool:
    for u, row in enumerate(adj):
        higher = row >> u + 1 << u + 1
        for v in iter_bits(higher):
            if adj[v] & higher:
                return True
    return False


def is_triangle_free(g: Graph) -> bool:
    return not has_triangle(g.adj)
