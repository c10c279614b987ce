"""Isomorph-free exhaustive search for ex(n, H, F) on small vertex counts.

Graphs are grown edge by edge from the empty graph.  A child ``C = P + e``
is kept only if ``e`` lies in the automorphism orbit of C's canonical last
edge (the edge whose canonical endpoint positions are largest), so every
isomorphism class has exactly one parent chain.  Forbidden families are
monotone, so a child that contains a forbidden graph is dropped together
with its whole subtree; only the new edge needs testing.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import SearchCapError
from .graph import Graph, empty_graph
from .iso import (
    CanonicalForm,
    GraphFamily,
    Labeling,
    _is_perfect_matching,
    _twin_classes,
    _UnionFind,
    canonical_form,
    canonical_labeling,
    contains_through_edge,
    count_copies_family,
    is_family_free,
)
from .graph6 import emit_graph6

log = logging.getLogger(__name__)

DEFAULT_MAX_EXTREMAL = 100


def default_cap(forbidden: Iterable[Graph]) -> int:
    """10 vertices when some M_{s+1} with s <= 3 is forbidden, 8 otherwise."""
    for f in forbidden:
        if _is_perfect_matching(f) and f.n // 2 <= 4:
            return 10
    return 8


@dataclass(frozen=True)
class SearchProblem:
    n: int
    counted: GraphFamily
    forbidden: GraphFamily
    collect_extremal: bool = True
    max_extremal: int = DEFAULT_MAX_EXTREMAL
    maximal_only: bool = True
    cap: int | None = None
    override_cap: bool = False

    def __post_init__(self) -> None:
        if not len(self.counted) and not len(self.forbidden):
            raise ValueError("a search needs a counted or a forbidden family")
        check_cap(self.n, self.forbidden, self.cap, self.override_cap)


def check_cap(n: int, forbidden: Iterable[Graph], cap: int | None = None, override: bool = False) -> None:
    limit = default_cap(forbidden) if cap is None else cap
    if n <= limit:
        return
    if not override:
        raise SearchCapError(f"n={n} exceeds the search cap {limit}; pass an override to proceed")
    log.warning("n=%d exceeds the search cap %d: expect a long run", n, limit)


@dataclass
class SearchResult:
    n: int
    value: int
    extremal: list[CanonicalForm]
    truncated: bool
    graphs_enumerated: int
    elapsed: float = field(default=0.0, compare=False)

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "n": self.n,
            "value": self.value,
            "extremal": [f.graph6 for f in self.extremal],
            "truncated": self.truncated,
            "enumerated": self.graphs_enumerated,
        }
        if timing:
            out["seconds"] = round(self.elapsed, 3)
        return out


# --------------------------------------------------------------------------
# augmentation tree
# --------------------------------------------------------------------------


def _generators(g: Graph, lab: Labeling) -> list[tuple[int, ...]]:
    gens = list(lab.generators)
    for cls in _twin_classes(g.adj):
        for v in cls[1:]:
            perm = list(range(g.n))
            perm[cls[0]], perm[v] = v, cls[0]
            gens.append(tuple(perm))
    return gens


def _pair_orbits(n: int, pairs: list[tuple[int, int]], gens: list[tuple[int, ...]]) -> _UnionFind:
    index = {p: i for i, p in enumerate(pairs)}
    uf = _UnionFind(len(pairs))
    for gamma in gens:
        for i, (a, b) in enumerate(pairs):
            x, y = gamma[a], gamma[b]
            j = index.get((x, y) if x < y else (y, x))
            if j is not None:
                uf.union(i, j)
    return uf


def _last_edge(lab: Labeling) -> tuple[int, int]:
    rows = lab.rows
    # highest canonical position j with a lower neighbour, then its highest such neighbour
    for j in range(len(rows) - 1, -1, -1):
        low = rows[j] & ((1 << j) - 1)
        if low:
            i = low.bit_length() - 1
            a, b = lab.order[i], lab.order[j]
            return (a, b) if a < b else (b, a)
    raise ValueError("edgeless graph has no last edge")


class _Node:
    __slots__ = ("graph", "lab")

    def __init__(self, graph: Graph, lab: Labeling):
        self.graph = graph
        self.lab = lab

    def form(self) -> CanonicalForm:
        return CanonicalForm(self.graph.n, emit_graph6(Graph(self.graph.n, self.lab.rows, check=False)).encode())


def _is_canonical_child(child: Graph, lab: Labeling, edge: tuple[int, int], parent_form: CanonicalForm) -> bool:
    last = _last_edge(lab)
    if last == edge:
        return True
    colors = lab.colors
    if sorted((colors[edge[0]], colors[edge[1]])) != sorted((colors[last[0]], colors[last[1]])):
        return False
    pairs = [edge, last]
    gens = _generators(child, lab)
    # orbit closure restricted to edges of the child
    edges = list(child.edges())
    uf = _pair_orbits(child.n, edges, gens)
    idx = {p: i for i, p in enumerate(edges)}
    if uf.find(idx[pairs[0]]) == uf.find(idx[pairs[1]]):
        return True
    # discovered generators may not span the full group: decide exactly
    return canonical_form(child.without_edge(*last)) == parent_form


def _children(
    node: _Node, forbidden: tuple[Graph, ...], prune: bool
) -> Iterator[tuple[bool, _Node | None]]:
    """Yield ``(free, child)`` per orbit of non-edges; ``child`` is None if rejected."""
    g = node.graph
    non_edges = list(g.non_edges())
    if not non_edges:
        return
    uf = _pair_orbits(g.n, non_edges, _generators(g, node.lab))
    parent_form: CanonicalForm | None = None
    seen: set[tuple[int, ...]] = set()
    done_roots = set()
    for i, (a, b) in enumerate(non_edges):
        root = uf.find(i)
        if root in done_roots:
            continue
        done_roots.add(root)
        child = g.with_edge(a, b)
        if prune:
            free = not any(contains_through_edge(f, child, a, b) for f in forbidden)
        else:
            free = is_family_free(forbidden, child)
        if prune and not free:
            yield False, None
            continue
        lab = canonical_labeling(child)
        if parent_form is None:
            parent_form = node.form()
        if lab.rows in seen or not _is_canonical_child(child, lab, (a, b), parent_form):
            yield free, None
            continue
        seen.add(lab.rows)
        yield free, _Node(child, lab)


def _root(n: int) -> _Node:
    g = empty_graph(n)
    return _Node(g, canonical_labeling(g))


def _walk(node: _Node, forbidden: tuple[Graph, ...], prune: bool, node_free: bool) -> Iterator[tuple[_Node, bool, bool]]:
    """Depth-first ``(node, free, edge_maximal)`` over the subtree rooted at ``node``."""
    stack = [(node, node_free)]
    while stack:
        cur, free = stack.pop()
        kids = []
        maximal = True
        for child_free, child in _children(cur, forbidden, prune):
            if child_free:
                maximal = False
            if child is not None:
                kids.append((child, child_free))
        yield cur, free, maximal and free
        stack.extend(reversed(kids))


def enumerate_free_graphs(
    n: int,
    forbidden: Iterable[Graph] = (),
    *,
    prune: bool = True,
    cap: int | None = None,
    override_cap: bool = False,
) -> Iterator[Graph]:
    """One representative of every isomorphism class of n-vertex F-free graphs."""
    forbidden = tuple(forbidden)
    check_cap(n, forbidden, cap, override_cap)
    root = _root(n)
    root_free = is_family_free(forbidden, root.graph)
    if prune and not root_free:
        return
    for node, free, _ in _walk(root, forbidden, prune, root_free):
        if free:
            yield node.graph


# --------------------------------------------------------------------------
# extremal values
# --------------------------------------------------------------------------


@dataclass
class _Partial:
    value: int = -1
    extremal: list[CanonicalForm] = field(default_factory=list)
    enumerated: int = 0
    truncated: bool = False

    def offer(self, value: int, form: CanonicalForm | None, limit: int) -> None:
        if value > self.value:
            self.value = value
            self.extremal = []
            self.truncated = False
        if value == self.value and form is not None:
            self.extremal.append(form)
            if len(self.extremal) > limit:
                self.extremal.sort()
                del self.extremal[limit:]
                self.truncated = True

    def merge(self, other: _Partial, limit: int) -> None:
        self.enumerated += other.enumerated
        if other.value > self.value:
            self.value, self.extremal, self.truncated = other.value, list(other.extremal), other.truncated
        elif other.value == self.value:
            self.extremal.extend(other.extremal)
            self.truncated = self.truncated or other.truncated
        self.extremal = sorted(set(self.extremal))
        if len(self.extremal) > limit:
            del self.extremal[limit:]
            self.truncated = True


def _explore(args) -> _Partial:
    node, free, counted, forbidden, collect, limit, maximal_only, prune = args
    part = _Partial()
    for cur, cur_free, maximal in _walk(node, forbidden, prune, free):
        if not cur_free:
            continue
        part.enumerated += 1
        if maximal or not maximal_only:
            value = count_copies_family(counted, cur.graph)
            part.offer(value, cur.form() if collect else None, limit)
    part.extremal = sorted(set(part.extremal))
    return part


def _frontier(root: _Node, root_free: bool, forbidden: tuple[Graph, ...], prune: bool, width: int):
    """Expand breadth-first until at least ``width`` subtrees are available.

    Returns the expanded interior nodes and the frontier subtrees.
    """
    interior: list[tuple[_Node, bool, bool]] = []
    frontier = [(root, root_free)]
    while frontier and len(frontier) < width:
        nxt = []
        for cur, free in frontier:
            kids = []
            maximal = True
            for child_free, child in _children(cur, forbidden, prune):
                if child_free:
                    maximal = False
                if child is not None:
                    kids.append((child, child_free))
            interior.append((cur, free, maximal and free))
            nxt.extend(kids)
        frontier = nxt
    return interior, frontier


def exact_ex(problem: SearchProblem, workers: int = 1, prune: bool = True) -> SearchResult:
    """Exact ex(n, counted, forbidden) with the extremal graphs in canonical order.

    Counts are evaluated only on edge-maximal F-free graphs unless
    ``problem.maximal_only`` is False; copy counts never drop when an edge
    is added, so the maximum is unaffected.
    """
    start = time.perf_counter()
    counted = tuple(problem.counted)
    forbidden = tuple(problem.forbidden)
    limit = problem.max_extremal
    root = _root(problem.n)
    total = _Partial()
    root_free = is_family_free(forbidden, root.graph)
    if not prune or root_free:
        if workers <= 1:
            total = _explore((root, root_free, counted, forbidden, problem.collect_extremal, limit, problem.maximal_only, prune))
        else:
            interior, frontier = _frontier(root, root_free, forbidden, prune, 4 * workers)
            for cur, cur_free, maximal in interior:
                if not cur_free:
                    continue
                total.enumerated += 1
                if maximal or not problem.maximal_only:
                    value = count_copies_family(counted, cur.graph)
                    total.offer(value, cur.form() if problem.collect_extremal else None, limit)
            total.extremal = sorted(set(total.extremal))
            jobs = [
                (node, free, counted, forbidden, problem.collect_extremal, limit, problem.maximal_only, prune)
                for node, free in frontier
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_explore, jobs):
                    total.merge(part, limit)
    if total.value < 0:
        # nothing is F-free: the maximum over an empty class is reported as 0
        total.value = 0
    return SearchResult(
        n=problem.n,
        value=total.value,
        extremal=sorted(set(total.extremal))[:limit],
        truncated=total.truncated,
        graphs_enumerated=total.enumerated,
        elapsed=time.perf_counter() - start,
    )


def ex(
    n: int,
    counted: Graph | Iterable[Graph],
    forbidden: Iterable[Graph],
    workers: int = 1,
    **kwargs,
) -> SearchResult:
    """Convenience wrapper building the :class:`SearchProblem`."""
    fam = GraphFamily([counted] if isinstance(counted, Graph) else counted)
    return exact_ex(SearchProblem(n, fam, GraphFamily(forbidden), **kwargs), workers=workers)


def exact_ex_sequence(
    n_values: Iterable[int],
    counted: Graph | Iterable[Graph],
    forbidden: Iterable[Graph],
    workers: int = 1,
    **kwargs,
) -> list[SearchResult]:
    forbidden = list(forbidden)
    return [ex(n, counted, forbidden, workers=workers, **kwargs) for n in n_values]
