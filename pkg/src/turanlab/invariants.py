"""Graph invariants: matchings and Berge-Tutte certificates, colourings,
independent sets, the bipartite parameter p(F), deletion families and
useless vertices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphDomainError, MalformedCertificateError
from .graph import Graph, complement, induced_subgraph, mask_of, members
from .iso import GraphFamily, vertices_in_copies
from .matching import matching_number, maximum_matching

__all__ = [
    "BergeTutteCertificate",
    "DeletionFamily",
    "berge_tutte_certificate",
    "chromatic_number",
    "clique_number",
    "components",
    "deletion_family",
    "family_min_chromatic",
    "independence_number",
    "independent_sets",
    "matching_number",
    "maximum_matching",
    "min_color_class",
    "useless_vertices",
    "verify_certificate",
]


def components(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of ``g[within]`` as masks, ordered by least vertex."""
    rest = g.vertex_mask if within is None else within
    out = []
    while rest:
        seed = rest & -rest
        comp = frontier = seed
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.adj[low.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


# --------------------------------------------------------------------------
# Berge-Tutte certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class BergeTutteCertificate:
    """Cut set ``B`` and the odd components of ``G - B``."""

    cut: int
    components: tuple[int, ...]
    value: int

    def to_json(self) -> dict:
        return {
            "B": members(self.cut),
            "components": [members(c) for c in self.components],
            "value": self.value,
        }

    @classmethod
    def from_json(cls, data: dict) -> BergeTutteCertificate:
        return cls(mask_of(data["B"]), tuple(mask_of(c) for c in data["components"]), int(data["value"]))


def _certificate_value(cut: int, comps: Iterable[int]) -> int:
    return cut.bit_count() + sum((c.bit_count() - 1) // 2 for c in comps)


def _spanning_leaf(g: Graph, comp: int) -> int:
    """A vertex whose removal leaves ``g[comp]`` connected (a BFS-tree leaf)."""
    seed = comp & -comp
    seen = frontier = seed
    last = seed.bit_length() - 1
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= g.adj[v] & comp & ~seen
        seen |= nxt
        if nxt:
            last = members(nxt)[-1]
        frontier = nxt
    return last


def berge_tutte_certificate(g: Graph) -> BergeTutteCertificate:
    """Certificate with value equal to the matching number.

    ``D`` is the set of vertices missed by some maximum matching and the
    cut is ``B = N(D) - D``.  Components of ``G - B`` inside ``D`` are odd;
    the others have perfect matchings, and each of those is made odd by
    moving one non-cut vertex into ``B``.  The result is checked against
    ``matching_number`` before it is returned.
    """
    nu = matching_number(g)
    full = g.vertex_mask
    d_set = 0
    for v in range(g.n):
        if matching_number(induced_subgraph(g, full & ~(1 << v))) == nu:
            d_set |= 1 << v
    cut = 0
    for v in members(d_set):
        cut |= g.adj[v]
    cut &= ~d_set
    comps = components(g, full & ~cut)
    odd = []
    for comp in comps:
        if comp.bit_count() % 2:
            odd.append(comp)
        else:
            x = _spanning_leaf(g, comp)
            cut |= 1 << x
            odd.append(comp & ~(1 << x))
    odd.sort(key=lambda c: c & -c)
    cert = BergeTutteCertificate(cut, tuple(odd), _certificate_value(cut, odd))
    if cert.value != nu:
        raise AssertionError(f"certificate value {cert.value} != matching number {nu}")
    return cert


def verify_certificate(g: Graph, cert: BergeTutteCertificate, s: int) -> bool:
    """True iff ``cert`` is well formed and witnesses that ``g`` is M_{s+1}-free.

    Structural defects raise :class:`MalformedCertificateError`; a well
    formed certificate of value greater than ``s`` simply returns False.
    """
    full = g.vertex_mask
    if cert.cut & ~full:
        raise MalformedCertificateError("cut set contains vertices outside the graph")
    seen = cert.cut
    for comp in cert.components:
        if not comp or comp & ~full:
            raise MalformedCertificateError("component is empty or out of range")
        if comp & seen:
            raise MalformedCertificateError("components overlap each other or the cut set")
        seen |= comp
        if comp.bit_count() % 2 == 0:
            raise MalformedCertificateError(f"component {members(comp)} has even order")
        if components(g, comp) != [comp]:
            raise MalformedCertificateError(f"component {members(comp)} is not connected")
    if seen != full:
        raise MalformedCertificateError("cut set and components do not cover the vertex set")
    outside = full & ~cert.cut
    for comp in cert.components:
        for v in members(comp):
            if g.adj[v] & outside & ~comp:
                raise MalformedCertificateError("an edge joins two different components")
    if cert.value != _certificate_value(cert.cut, cert.components):
        raise MalformedCertificateError("stated value disagrees with |B| + sum (|A_i|-1)/2")
    return cert.value <= s


# --------------------------------------------------------------------------
# cliques, independent sets, colourings
# --------------------------------------------------------------------------


def clique_number(g: Graph) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + cand.bit_count() <= best:
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            cand ^= low
            expand(size + 1, cand & g.adj[low.bit_length() - 1])

    expand(0, g.vertex_mask)
    return best


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


def independent_sets(g: Graph) -> Iterator[int]:
    """All independent sets (including the empty one) as masks."""

    def rec(chosen: int, cand: int) -> Iterator[int]:
        yield chosen
        while cand:
            low = cand & -cand
            cand ^= low
            yield from rec(chosen | low, cand & ~g.adj[low.bit_length() - 1])

    yield from rec(0, g.vertex_mask)


def _greedy_colors(g: Graph, order: list[int]) -> int:
    color = {}
    for v in order:
        used = {color[w] for w in members(g.adj[v]) if w in color}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return max(color.values(), default=-1) + 1


def _colorable(g: Graph, k: int, order: list[int]) -> bool:
    n = g.n
    # class_masks[c] = vertices already given colour c
    class_masks = [0] * k

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        row = g.adj[v]
        # symmetry breaking: at most one fresh colour per step
        for c in range(min(used + 1, k)):
            if not class_masks[c] & row:
                class_masks[c] |= 1 << v
                if rec(i + 1, max(used, c + 1)):
                    return True
                class_masks[c] &= ~(1 << v)
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterative deepening between clique and greedy bounds."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    lo, hi = max(1, clique_number(g)), _greedy_colors(g, order)
    for k in range(lo, hi):
        if _colorable(g, k, order):
            return k
    return hi


def min_color_class(f: Graph) -> int:
    """Smallest possible colour class over proper 2-colourings of bipartite ``f``.

    Each component's bipartition can be flipped independently, so this is a
    subset sum over the components' side sizes.  Colour classes may be
    empty, so an edgeless graph gives 0.
    """
    if f.n == 0:
        raise GraphDomainError("p(F) needs at least one vertex")
    sides = []
    for comp in components(f):
        start = comp & -comp
        colour = {start.bit_length() - 1: 0}
        stack = [start.bit_length() - 1]
        while stack:
            v = stack.pop()
            for w in members(f.adj[v]):
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    stack.append(w)
                elif colour[w] == colour[v]:
                    raise GraphDomainError("min_color_class needs a bipartite graph")
        a = sum(1 for c in colour.values() if c == 0)
        sides.append((a, len(colour) - a))
    reachable = {0}
    for a, b in sides:
        reachable = {x + a for x in reachable} | {x + b for x in reachable}
    return min(min(x, f.n - x) for x in reachable)


# --------------------------------------------------------------------------
# deletion families
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DeletionFamily:
    members: GraphFamily
    source: Graph
    star_only: bool

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def deletion_family(f: Graph, star_only: bool = False, include_empty: bool = False) -> DeletionFamily:
    """Graphs ``F - I`` for non-empty independent sets ``I`` of ``F``.

    With ``star_only`` only maximum independent sets are deleted.  The
    ``include_empty`` switch also admits ``I = {}`` (``F`` itself) and is
    meant for experiments only.
    """
    if not f.edge_count():
        raise GraphDomainError("deletion families are defined for graphs with at least one edge")
    full = f.vertex_mask
    sets = list(independent_sets(f))
    if star_only:
        alpha = max(i.bit_count() for i in sets)
        sets = [i for i in sets if i.bit_count() == alpha]
    elif not include_empty:
        sets = [i for i in sets if i]
    fam = GraphFamily(induced_subgraph(f, full & ~i) for i in sets)
    return DeletionFamily(fam, f, star_only)


def family_min_chromatic(fam: Iterable[Graph]) -> int:
    values = [chromatic_number(g) for g in fam]
    if not values:
        raise GraphDomainError("empty family has no chromatic number")
    return min(values)


def useless_vertices(g0: Graph, counted: Iterable[Graph]) -> int:
    """Vertices of ``g0`` lying in no copy of any member of ``counted``."""
    covered = 0
    for h in counted:
        covered |= vertices_in_copies(h, g0)
    return g0.vertex_mask & ~covered
