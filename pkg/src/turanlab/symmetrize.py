"""Zykov symmetrization as a single step and as a constrained local search.

Symmetrizing ``u`` to ``v`` (non-adjacent) replaces the neighbourhood of
``u`` by that of ``v``.  The optimizer works in *moves*: pick the best
pair, symmetrize one endpoint to the other, then sweep every remaining
vertex that shared the source's old neighbourhood to the same target.  A
whole sweep merges two classes of equal neighbourhoods, which is what
makes the process terminate.

Schedule (fixed here, not canonical): when a ``core`` vertex set is given,
moves between two core vertices are exhausted first; afterwards all
non-adjacent pairs are eligible.  Pairs are scanned in ascending
lexicographic order and the candidate with the largest count after its
first step wins, earliest pair on ties.  A move is accepted iff every step
is legal and non-decreasing, and the move strictly increases the count or
strictly decreases the number of distinct neighbourhoods.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import GraphDomainError
from .graph import Graph, members
from .iso import count_copies_family, is_family_free


@dataclass(frozen=True)
class Step:
    source: int
    target: int
    copies_before: int
    copies_after: int

    def to_json(self) -> dict:
        return {
            "u": self.source,
            "v": self.target,
            "direction": f"{self.source}->{self.target}",
            "copies_before": self.copies_before,
            "copies_after": self.copies_after,
        }


@dataclass
class SymmetrizationTrace:
    steps: list[Step] = field(default_factory=list)
    final: Graph | None = None
    reached_fixpoint: bool = False


def symmetrize_step(g: Graph, u: int, v: int) -> Graph:
    """Replace the neighbourhood of ``u`` by that of ``v``."""
    if u == v or g.has_edge(u, v):
        raise GraphDomainError(f"symmetrizing needs distinct non-adjacent vertices, got {u}, {v}")
    rows = list(g.adj)
    bit_u = 1 << u
    for w in members(rows[u]):
        rows[w] &= ~bit_u
    target = rows[v]
    rows[u] = target
    for w in members(target):
        rows[w] |= bit_u
    return Graph(g.n, rows, check=False)


def distinct_neighborhoods(g: Graph) -> int:
    return len(set(g.adj))


def best_symmetrization(
    g: Graph,
    u: int,
    v: int,
    counted: Iterable[Graph],
    forbidden: Iterable[Graph],
    current: int | None = None,
) -> tuple[Graph, tuple[int, int] | None]:
    """Better of the two directions, or ``(g, None)`` when both are rejected.

    A direction is legal if the result is free of every forbidden member.
    Both directions illegal, or both strictly decreasing the count, means
    rejection.  Equal counts favour symmetrizing the smaller index.
    """
    counted, forbidden = tuple(counted), tuple(forbidden)
    if current is None:
        current = count_copies_family(counted, g)
    a, b = min(u, v), max(u, v)
    best: tuple[int, Graph, tuple[int, int]] | None = None
    for src, dst in ((a, b), (b, a)):
        cand = symmetrize_step(g, src, dst)
        if not is_family_free(forbidden, cand):
            continue
        value = count_copies_family(counted, cand)
        if best is None or value > best[0]:
            best = (value, cand, (src, dst))
    if best is None or best[0] < current:
        return g, None
    return best[1], best[2]


def _sweep(
    g: Graph,
    src: int,
    dst: int,
    counted: tuple[Graph, ...],
    forbidden: tuple[Graph, ...],
    before: int,
) -> tuple[Graph, list[Step], int]:
    """Move ``src`` and then each former twin of ``src`` onto ``dst``'s neighbourhood."""
    old_nbhd = g.adj[src]
    twins = [w for w in range(g.n) if w not in (src, dst) and g.adj[w] == old_nbhd]
    steps = []
    cur, count = g, before
    for w in [src, *twins]:
        if cur.has_edge(w, dst) or cur.adj[w] == cur.adj[dst]:
            continue
        nxt = symmetrize_step(cur, w, dst)
        if not is_family_free(forbidden, nxt):
            break
        value = count_copies_family(counted, nxt)
        if value < count:
            break
        steps.append(Step(w, dst, count, value))
        cur, count = nxt, value
    return cur, steps, count


def symmetrize_to_fixpoint(
    g: Graph,
    counted: Iterable[Graph],
    forbidden: Iterable[Graph],
    budget: int = 500,
    core: int | None = None,
) -> SymmetrizationTrace:
    """Apply accepted moves until none is left or ``budget`` steps were taken."""
    if budget <= 0:
        raise GraphDomainError("budget must be positive")
    counted, forbidden = tuple(counted), tuple(forbidden)
    if not is_family_free(forbidden, g):
        raise GraphDomainError("the starting graph already contains a forbidden graph")
    trace = SymmetrizationTrace()
    cur = g
    count = count_copies_family(counted, cur)
    phases = [core, None] if core else [None]
    for phase in phases:
        while True:
            if len(trace.steps) >= budget:
                trace.final = cur
                return trace
            move = _best_move(cur, counted, forbidden, count, phase)
            if move is None:
                break
            cur, steps, count = move
            room = budget - len(trace.steps)
            trace.steps.extend(steps[:room])
            if len(steps) > room:
                # budget ran out inside a sweep: replay the admitted prefix
                cur = g
                for st in trace.steps:
                    cur = symmetrize_step(cur, st.source, st.target)
                trace.final = cur
                return trace
    trace.final = cur
    trace.reached_fixpoint = True
    return trace


def _best_move(
    g: Graph,
    counted: tuple[Graph, ...],
    forbidden: tuple[Graph, ...],
    count: int,
    within: int | None,
):
    verts = range(g.n) if within is None else members(within)
    ranked = []
    for u, v in combinations(verts, 2):
        if g.has_edge(u, v) or g.adj[u] == g.adj[v]:
            continue
        cand, direction = best_symmetrization(g, u, v, counted, forbidden, count)
        if direction is None:
            continue
        ranked.append((-count_copies_family(counted, cand), len(ranked), direction))
    ranked.sort()
    classes = distinct_neighborhoods(g)
    for _, _, (src, dst) in ranked:
        new, steps, value = _sweep(g, src, dst, counted, forbidden, count)
        if not steps:
            continue
        if value > count or distinct_neighborhoods(new) < classes:
            return new, steps, value
    return None


def is_complete_multipartite(g: Graph) -> tuple[bool, list[int]]:
    """Whether non-adjacency is an equivalence relation, with the parts.

    Parts are vertex masks ordered by their smallest vertex.
    """
    full = g.vertex_mask
    parts = []
    seen = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        part = full & ~g.adj[v]
        for w in members(part):
            if g.adj[w] != g.adj[v]:
                return False, []
        parts.append(part)
        seen |= part
    return True, parts
