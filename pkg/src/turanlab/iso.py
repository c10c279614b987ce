"""Canonical labelling, isomorphism and (non-induced) subgraph counting.

The canonical labeller is a small individualisation-refinement search:
colour refinement to an equitable ordered partition, then branching on
the first smallest non-singleton cell.  Branches are pruned with twin
transpositions and with automorphisms discovered at leaves that fix the
current prefix pointwise.  The canonical graph is the leaf whose
relabelled adjacency rows are lexicographically largest.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Sequence

from .graph import Graph, induced_subgraph, members
from .graph6 import emit_graph6
from .matching import matching_number


# --------------------------------------------------------------------------
# canonical labelling
# --------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant key: the graph6 string of the canonical relabelling."""

    n: int
    code: bytes

    @property
    def graph6(self) -> str:
        return self.code.decode("ascii")

    def graph(self) -> Graph:
        from .graph6 import parse_graph6

        return parse_graph6(self.graph6)


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # order[i] = original vertex placed at canonical position i
    rows: tuple[int, ...]  # adjacency rows of the canonical graph
    generators: tuple[tuple[int, ...], ...]  # automorphisms found during the search
    colors: tuple[int, ...]  # equitable-partition cell index of each vertex


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _twin_classes(adj: Sequence[int]) -> list[list[int]]:
    """Classes of vertices with equal open or equal closed neighbourhoods."""
    open_groups: dict[int, list[int]] = {}
    closed_groups: dict[int, list[int]] = {}
    for v, row in enumerate(adj):
        open_groups.setdefault(row, []).append(v)
        closed_groups.setdefault(row | (1 << v), []).append(v)
    return [c for c in (*open_groups.values(), *closed_groups.values()) if len(c) > 1]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def canonical_labeling(g: Graph) -> Labeling:
    n, adj = g.n, g.adj
    if n == 0:
        return Labeling((), (), (), ())
    degree_cells: dict[int, list[int]] = {}
    for v, row in enumerate(adj):
        degree_cells.setdefault(row.bit_count(), []).append(v)
    root = _refine(adj, [degree_cells[d] for d in sorted(degree_cells)])
    colors = [0] * n
    for i, cell in enumerate(root):
        for v in cell:
            colors[v] = i
    twins = _twin_classes(adj)

    best_rows: tuple[int, ...] | None = None
    best_order: list[int] = []
    generators: list[tuple[int, ...]] = []

    def leaf(cells: list[list[int]]) -> None:
        nonlocal best_rows, best_order
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            a = adj[v]
            while a:
                low = a & -a
                r |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(r)
        key = tuple(rows)
        if best_rows is None or key > best_rows:
            best_rows, best_order = key, order
        elif key == best_rows:
            gamma = [0] * n
            for a_, b_ in zip(best_order, order):
                gamma[a_] = b_
            generators.append(tuple(gamma))

    def orbit_roots(prefix: list[int]) -> _UnionFind:
        uf = _UnionFind(n)
        fixed = set(prefix)
        for cls in twins:
            free = [v for v in cls if v not in fixed]
            for v in free[1:]:
                uf.union(free[0], v)
        for gamma in generators:
            if all(gamma[p] == p for p in prefix):
                for v in range(n):
                    if gamma[v] != v:
                        uf.union(v, gamma[v])
        return uf

    def visit(cells: list[list[int]], prefix: list[int]) -> None:
        if len(cells) == n:
            leaf(cells)
            return
        t = min((len(c), i) for i, c in enumerate(cells) if len(c) > 1)[1]
        cell = cells[t]
        explored: list[int] = []
        for v in cell:
            if explored:
                uf = orbit_roots(prefix)
                rv = uf.find(v)
                if any(uf.find(x) == rv for x in explored):
                    continue
            explored.append(v)
            split = cells[:t] + [[v], [w for w in cell if w != v]] + cells[t + 1 :]
            visit(_refine(adj, split), prefix + [v])

    visit(root, [])
    assert best_rows is not None
    return Labeling(tuple(best_order), best_rows, tuple(generators), tuple(colors))


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> CanonicalForm:
    lab = canonical_labeling(g)
    return CanonicalForm(g.n, emit_graph6(Graph(g.n, lab.rows, check=False)).encode("ascii"))


def canonical_graph(g: Graph) -> Graph:
    lab = canonical_labeling(g)
    return Graph(g.n, lab.rows, check=False)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)


# --------------------------------------------------------------------------
# embedding search
# --------------------------------------------------------------------------


def _pattern_order(h: Graph, first: Sequence[int] = ()) -> list[int]:
    """Descending degree, each next vertex maximising links to those placed."""
    placed = list(first)
    rest = [v for v in range(h.n) if v not in set(first)]
    placed_mask = 0
    for v in placed:
        placed_mask |= 1 << v
    while rest:
        v = max(rest, key=lambda x: ((h.adj[x] & placed_mask).bit_count(), h.degree(x), -x))
        rest.remove(v)
        placed.append(v)
        placed_mask |= 1 << v
    return placed


class _Matcher:
    """Backtracking embedder of pattern ``h`` into host ``g``."""

    def __init__(
        self,
        h: Graph,
        g: Graph,
        fixed: dict[int, int] | None = None,
        h_colors: Sequence[int] | None = None,
        g_colors: Sequence[int] | None = None,
    ):
        fixed = fixed or {}
        self.order = _pattern_order(h, list(fixed))
        pos = {v: i for i, v in enumerate(self.order)}
        self.back = [[pos[w] for w in members(h.adj[v]) if pos[w] < i] for i, v in enumerate(self.order)]
        g_deg = g.degrees()
        base = []
        for v in self.order:
            m = 0
            dv = h.degree(v)
            for w in range(g.n):
                if g_deg[w] >= dv and (h_colors is None or h_colors[v] == g_colors[w]):
                    m |= 1 << w
            if v in fixed:
                m &= 1 << fixed[v]
            base.append(m)
        self.base = base
        self.gadj = g.adj
        self.k = h.n
        self.feasible = h.n <= g.n

    def count(self) -> int:
        if not self.feasible:
            return 0
        k, base, back, gadj = self.k, self.base, self.back, self.gadj
        if k == 0:
            return 1
        image = [0] * k
        last = k - 1

        def rec(i: int, avail: int) -> int:
            cand = base[i] & avail
            for j in back[i]:
                cand &= gadj[image[j]]
            if i == last:
                return cand.bit_count()
            total = 0
            while cand:
                low = cand & -cand
                cand ^= low
                image[i] = low.bit_length() - 1
                total += rec(i + 1, avail ^ low)
            return total

        return rec(0, (1 << len(gadj)) - 1)

    def first(self) -> list[int] | None:
        """One embedding as ``image[v]`` for pattern vertex ``v``, or ``None``."""
        if not self.feasible:
            return None
        k, base, back, gadj = self.k, self.base, self.back, self.gadj
        image = [0] * k

        def rec(i: int, avail: int) -> bool:
            if i == k:
                return True
            cand = base[i] & avail
            for j in back[i]:
                cand &= gadj[image[j]]
            while cand:
                low = cand & -cand
                cand ^= low
                image[i] = low.bit_length() - 1
                if rec(i + 1, avail ^ low):
                    return True
            return False

        if not rec(0, (1 << len(gadj)) - 1):
            return None
        out = [0] * k
        for i, v in enumerate(self.order):
            out[v] = image[i]
        return out


def _falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def count_embeddings(h: Graph, g: Graph) -> int:
    """Injective edge-preserving maps V(h) -> V(g); extra host edges allowed."""
    iso = h.isolated_mask()
    j = iso.bit_count()
    if j == 0:
        return _Matcher(h, g).count()
    core = induced_subgraph(h, h.vertex_mask & ~iso)
    if core.n > g.n or h.n > g.n:
        return 0
    return _Matcher(core, g).count() * _falling(g.n - core.n, j)


def find_embedding(h: Graph, g: Graph, fixed: dict[int, int] | None = None) -> list[int] | None:
    return _Matcher(h, g, fixed).first()


def _is_complete(h: Graph) -> bool:
    full = h.vertex_mask
    return all(row == full & ~(1 << v) for v, row in enumerate(h.adj))


def _is_perfect_matching(h: Graph) -> bool:
    return h.n > 0 and all(row.bit_count() == 1 for row in h.adj)


def _has_clique(adj: Sequence[int], cand: int, k: int) -> bool:
    if k == 0:
        return True
    if cand.bit_count() < k:
        return False
    while cand:
        if cand.bit_count() < k:
            return False
        low = cand & -cand
        cand ^= low
        v = low.bit_length() - 1
        if _has_clique(adj, cand & adj[v], k - 1):
            return True
    return False


def contains_subgraph(h: Graph, g: Graph) -> bool:
    """True iff ``g`` has a (not necessarily induced) subgraph isomorphic to ``h``."""
    if h.n > g.n or h.edge_count() > g.edge_count():
        return False
    if _is_complete(h):
        return _has_clique(g.adj, g.vertex_mask, h.n)
    if _is_perfect_matching(h):
        return matching_number(g) >= h.n // 2
    iso = h.isolated_mask()
    if iso:
        h = induced_subgraph(h, h.vertex_mask & ~iso)
    return _Matcher(h, g).first() is not None


def contains_through_edge(h: Graph, g: Graph, a: int, b: int) -> bool:
    """True iff some embedding of ``h`` into ``g`` uses host edge ``ab``.

    If ``g - ab`` is ``h``-free this is equivalent to ``contains_subgraph``,
    which is how the exhaustive search tests children incrementally.
    """
    if h.n > g.n or not h.edge_count():
        return False
    if _is_complete(h):
        return _has_clique(g.adj, g.adj[a] & g.adj[b], h.n - 2)
    if _is_perfect_matching(h):
        return matching_number(g) >= h.n // 2
    seen = set()
    for x, y in h.edges():
        for p, q in ((x, y), (y, x)):
            if (p, q) in seen:
                continue
            seen.add((p, q))
            if _Matcher(h, g, {p: a, q: b}).first() is not None:
                return True
    return False


# --------------------------------------------------------------------------
# automorphisms and copies
# --------------------------------------------------------------------------


def _colored_self_embeddings(q: Graph, colors: Sequence[int]) -> int:
    return _Matcher(q, q, h_colors=colors, g_colors=colors).count()


@lru_cache(maxsize=4096)
def automorphism_count(h: Graph) -> int:
    """|Aut(h)|, via the twin-class quotient.

    Twin classes are permuted arbitrarily inside, so
    |Aut(h)| = prod |C|! * |Aut(Q)| with Q the quotient coloured by
    (class size, clique/independent).
    """
    n = h.n
    if n == 0:
        return 1
    cls_of = list(range(n))
    for cls in _twin_classes(h.adj):
        for v in cls:
            cls_of[v] = min(cls_of[v], cls[0])
    reps = sorted(set(cls_of))
    index = {r: i for i, r in enumerate(reps)}
    sizes = [0] * len(reps)
    for v in range(n):
        sizes[index[cls_of[v]]] += 1
    q_rows = [0] * len(reps)
    colors = []
    for i, r in enumerate(reps):
        for w in members(h.adj[r]):
            if cls_of[w] != r:
                q_rows[i] |= 1 << index[cls_of[w]]
        clique = sizes[i] > 1 and any(cls_of[w] == r for w in members(h.adj[r]))
        colors.append(sizes[i] * 2 + int(clique))
    q = Graph(len(reps), q_rows, check=False)
    total = _colored_self_embeddings(q, colors)
    for s in sizes:
        total *= factorial(s)
    return total


def count_copies(h: Graph, g: Graph, cache: CountCache | None = None) -> int:
    """Number of subgraphs of ``g`` isomorphic to ``h``."""
    if cache is not None:
        return cache.get(h, g)
    emb = count_embeddings(h, g)
    aut = automorphism_count(h)
    value, rem = divmod(emb, aut)
    if rem:
        raise ArithmeticError(f"{emb} embeddings not divisible by |Aut| = {aut}")
    return value


class CountCache:
    """Transparent, thread-safe memo of copy counts keyed by canonical forms."""

    def __init__(self) -> None:
        self._table: dict[tuple[CanonicalForm, CanonicalForm], int] = {}
        self._lock = threading.Lock()

    def get(self, h: Graph, g: Graph) -> int:
        key = (canonical_form(h), canonical_form(g))
        with self._lock:
            hit = self._table.get(key)
        if hit is not None:
            return hit
        value = count_copies(h, g)
        with self._lock:
            self._table.setdefault(key, value)
        return value

    def __len__(self) -> int:
        return len(self._table)


# --------------------------------------------------------------------------
# families
# --------------------------------------------------------------------------


class GraphFamily:
    """Graphs deduplicated up to isomorphism, in canonical order."""

    __slots__ = ("members", "forms")

    def __init__(self, graphs: Iterable[Graph] = ()):
        seen: dict[CanonicalForm, Graph] = {}
        for g in graphs:
            seen.setdefault(canonical_form(g), g)
        keys = sorted(seen)
        self.forms: tuple[CanonicalForm, ...] = tuple(keys)
        self.members: tuple[Graph, ...] = tuple(seen[k] for k in keys)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g: object) -> bool:
        return isinstance(g, Graph) and canonical_form(g) in self.forms

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GraphFamily) and self.forms == other.forms

    def __hash__(self) -> int:
        return hash(self.forms)

    def __repr__(self) -> str:
        return f"GraphFamily([{', '.join(f.graph6 for f in self.forms)}])"

    def __reduce__(self):
        return (GraphFamily, (self.members,))

    def union(self, other: Iterable[Graph]) -> GraphFamily:
        return GraphFamily((*self.members, *other))


def dedup_family(graphs: Iterable[Graph]) -> GraphFamily:
    return GraphFamily(graphs)


def count_copies_family(fam: Iterable[Graph], g: Graph, cache: CountCache | None = None) -> int:
    return sum(count_copies(h, g, cache) for h in fam)


def is_family_free(fam: Iterable[Graph], g: Graph) -> bool:
    return not any(contains_subgraph(h, g) for h in fam)


def vertices_in_copies(h: Graph, g: Graph) -> int:
    """Mask of host vertices lying in at least one copy of ``h``."""
    if h.n == 0 or h.n > g.n:
        return 0
    if not h.edge_count():
        return g.vertex_mask
    iso = h.isolated_mask()
    core = induced_subgraph(h, h.vertex_mask & ~iso) if iso else h
    covered = 0
    for v in range(g.n):
        if covered >> v & 1:
            continue
        for x in range(core.n):
            image = find_embedding(core, g, {x: v})
            if image is not None:
                for w in image:
                    covered |= 1 << w
                break
        else:
            # v can still host an isolated pattern vertex of a copy avoiding it
            if iso and find_embedding(core, induced_subgraph(g, g.vertex_mask & ~(1 << v))):
                covered |= 1 << v
    return covered


__all__ = [
    "CanonicalForm",
    "CountCache",
    "GraphFamily",
    "Labeling",
    "are_isomorphic",
    "automorphism_count",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "contains_subgraph",
    "contains_through_edge",
    "count_copies",
    "count_copies_family",
    "count_embeddings",
    "dedup_family",
    "find_embedding",
    "is_family_free",
    "vertices_in_copies",
]
