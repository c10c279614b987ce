"""Blow-up exponents b(H, s), b'(H, F, s) and join polynomials.

Deciding b-type freeness needs a quantifier over every blow-up factor m.
Blow-ups are nested in m, and an embedding of a pattern F' touches at most
|V(F')| vertices of any blown class, so checking the single factor
``m* = max(s + 1, max |V(F)|)`` decides all m at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .errors import CapacityError
from .graph import MAX_VERTICES, Graph, empty_graph, join, mask_of, members, partial_blowup
from .invariants import independence_number
from .iso import CanonicalForm, canonical_form, count_copies, is_family_free
from .matching import matching_number


@dataclass(frozen=True)
class BlowupSpec:
    base: Graph
    u_set: int
    m: int

    def build(self) -> Graph:
        return partial_blowup(self.base, self.u_set, self.m)


@dataclass(frozen=True)
class ExponentResult:
    """Largest admissible ``U``; ``value`` is None when even ``U = {}`` fails."""

    value: int | None
    witness: int | None
    bound_m: int

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness": None if self.witness is None else members(self.witness),
            "bound_m": self.bound_m,
        }


def blowup_m_bound(h: Graph, forbidden: Iterable[Graph], s: int) -> int:
    return max([s + 1, *(f.n for f in forbidden)])


def _free(g: Graph, forbidden: tuple[Graph, ...], s: int) -> bool:
    return matching_number(g) <= s and is_family_free(forbidden, g)


def _exponent(h: Graph, forbidden: tuple[Graph, ...], s: int) -> ExponentResult:
    m = blowup_m_bound(h, forbidden, s)
    for size in range(h.n, -1, -1):
        if h.n + (m - 1) * size > MAX_VERTICES:
            # report the first offending set in the scan order
            u = mask_of(range(size))
            raise CapacityError(
                f"blow-up of U={members(u)} at m={m} needs {h.n + (m - 1) * size} vertices"
            )
        masks = sorted(mask_of(c) for c in combinations(range(h.n), size))
        for u in masks:
            if _free(partial_blowup(h, u, m), forbidden, s):
                return ExponentResult(size, u, m)
    return ExponentResult(None, None, m)


def b_value(h: Graph, s: int) -> ExponentResult:
    """Largest |U| whose partial blow-ups of ``h`` never contain M_{s+1}."""
    return _exponent(h, (), s)


def b_prime_value(h: Graph, f: Graph, s: int) -> ExponentResult:
    """Largest |U| whose partial blow-ups avoid both ``f`` and M_{s+1}."""
    return _exponent(h, (f,), s)


def blowup_family_exponent(h: Graph, forbidden: Iterable[Graph], s: int) -> ExponentResult:
    return _exponent(h, tuple(forbidden), s)


# --------------------------------------------------------------------------
# join polynomials
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class JoinPolynomial:
    """N(H, G0 + K̄_t) = sum_i coeffs[i] * C(t, i) for every t >= 0."""

    coeffs: tuple[int, ...]
    base_order: int
    pattern: CanonicalForm

    def __call__(self, t: int) -> int:
        return eval_join_polynomial(self, t)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "base_order": self.base_order, "pattern": self.pattern.graph6}


def join_polynomial(h: Graph, g0: Graph) -> JoinPolynomial:
    """Coefficients by inclusion-exclusion over the added independent vertices.

    ``coeffs[i]`` counts copies of ``h`` in ``G0 + K̄_i`` containing all ``i``
    added vertices; the added vertices are pairwise twins, so this is the
    count for any fixed ``i``-subset of a larger independent part.
    """
    alpha = independence_number(h)
    if g0.n + alpha > MAX_VERTICES:
        raise CapacityError(f"G0 + K̄_{alpha} needs {g0.n + alpha} vertices")
    coeffs: list[int] = []
    for i in range(alpha + 1):
        total = count_copies(h, join(g0, empty_graph(i)))
        coeffs.append(total - sum(comb(i, j) * coeffs[j] for j in range(i)))
    return JoinPolynomial(tuple(coeffs), g0.n, canonical_form(h))


def eval_join_polynomial(p: JoinPolynomial, t: int) -> int:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return sum(c * comb(t, i) for i, c in enumerate(p.coeffs))
