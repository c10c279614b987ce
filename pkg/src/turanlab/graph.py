"""Small simple undirected graphs stored as adjacency bitsets.

A graph on ``n <= 64`` vertices is a tuple of ``n`` integers; bit ``v`` of
row ``u`` is set iff ``uv`` is an edge.  Vertex sets are plain ``int``
bitmasks as well, so neighbourhood intersection is a single ``&``.

Graphs are immutable.  Every "mutation" returns a new value, which makes
them safe to use as dictionary keys and memo-table entries.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphDomainError

MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Ascending list of the indices set in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _check_capacity(n: int) -> None:
    if n < 0:
        raise GraphDomainError(f"vertex count must be non-negative, got {n}")
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex cap")


class Graph:
    """Immutable simple graph with bitset adjacency rows."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        _check_capacity(n)
        self.n = n
        self.adj = tuple(adj)
        self._hash = hash((n, self.adj))
        if check:
            self.validate()

    # construction helpers -------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        _check_capacity(n)
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphDomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphDomainError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, check=False)

    def validate(self) -> None:
        """Raise if symmetry, irreflexivity or the row width is violated."""
        n, adj = self.n, self.adj
        if len(adj) != n:
            raise GraphDomainError(f"expected {n} rows, got {len(adj)}")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row < 0 or row & ~full:
                raise GraphDomainError(f"row {u} has bits beyond vertex {n - 1}")
            if row >> u & 1:
                raise GraphDomainError(f"loop at vertex {u}")
            for v in members(row):
                if not adj[v] >> u & 1:
                    raise GraphDomainError(f"asymmetric edge ({u}, {v})")

    # queries ---------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self.n), 2):
            if not self.adj[u] >> v & 1:
                yield u, v

    def isolated_mask(self) -> int:
        return mask_of(v for v, row in enumerate(self.adj) if not row)

    # derived graphs --------------------------------------------------------

    def with_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, check=False)

    def without_edge(self, u: int, v: int) -> Graph:
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, check=False)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            pu = perm[u]
            r = 0
            for v in members(row):
                r |= 1 << perm[v]
            rows[pu] = r
        return Graph(self.n, rows, check=False)

    # dunder ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.adj))


def _rebuild(n: int, adj: tuple[int, ...]) -> Graph:
    return Graph(n, adj, check=False)


# named constructions ---------------------------------------------------------


def empty_graph(n: int) -> Graph:
    _check_capacity(n)
    return Graph(n, [0] * n, check=False)


def complete_graph(n: int) -> Graph:
    _check_capacity(n)
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)], check=False)


def matching_graph(edges: int) -> Graph:
    """``edges`` disjoint edges on ``2 * edges`` vertices (vertex 2i ~ 2i+1)."""
    _check_capacity(2 * edges)
    return Graph.from_edges(2 * edges, [(2 * i, 2 * i + 1) for i in range(edges)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphDomainError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on vertices ``0..n1-1`` followed by ``g2`` shifted by ``n1``."""
    n1 = g1.n
    _check_capacity(n1 + g2.n)
    return Graph(n1 + g2.n, list(g1.adj) + [row << n1 for row in g2.adj], check=False)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    n1, n2 = g1.n, g2.n
    _check_capacity(n1 + n2)
    low = (1 << n1) - 1
    high = ((1 << n2) - 1) << n1
    rows = [row | high for row in g1.adj] + [(row << n1) | low for row in g2.adj]
    return Graph(n1 + n2, rows, check=False)


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], check=False)


def add_isolated(g: Graph, t: int) -> Graph:
    return disjoint_union(g, empty_graph(t))


def induced_subgraph(g: Graph, subset: int) -> Graph:
    """Subgraph induced by ``subset``, renumbered in ascending vertex order."""
    if subset < 0 or subset >> g.n:
        raise GraphDomainError(f"vertex set {subset:#x} out of range for n={g.n}")
    keep = members(subset)
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for w in members(g.adj[v] & subset):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph(len(keep), rows, check=False)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; part ``i`` occupies a consecutive block."""
    if any(p < 1 for p in parts):
        raise GraphDomainError(f"every part needs at least one vertex: {list(parts)}")
    n = sum(parts)
    _check_capacity(n)
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(n, rows, check=False)


def turan_parts(n: int, r: int) -> list[int]:
    if r < 1:
        raise GraphDomainError("the Turán graph needs r >= 1")
    if r >= n:
        return [1] * n
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def turan_graph(n: int, r: int) -> Graph:
    """Balanced complete r-partite graph on n vertices, larger parts first."""
    _check_capacity(n)
    return complete_multipartite(turan_parts(n, r)) if n else empty_graph(0)


def partial_blowup(h: Graph, u_set: int, m: int) -> Graph:
    """Replace each vertex of ``u_set`` by an independent ``m``-set.

    Copies of a blown vertex occupy consecutive indices in the slot the
    vertex had; every edge ``uv`` becomes the complete bipartite graph
    between the replacing sets.
    """
    if m < 1:
        raise GraphDomainError(f"blow-up factor must be >= 1, got {m}")
    if u_set < 0 or u_set >> h.n:
        raise GraphDomainError(f"vertex set {u_set:#x} out of range for n={h.n}")
    sizes = [m if u_set >> v & 1 else 1 for v in range(h.n)]
    total = sum(sizes)
    _check_capacity(total)
    blocks = []
    start = 0
    for size in sizes:
        blocks.append(((1 << size) - 1) << start)
        start += size
    rows = []
    for v in range(h.n):
        r = 0
        for w in members(h.adj[v]):
            r |= blocks[w]
        rows.extend([r] * sizes[v])
    return Graph(total, rows, check=False)
