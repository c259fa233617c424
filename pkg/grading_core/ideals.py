"""
Graded ideals, ideal arithmetic, and the ideal-level predicates.

Exponent quantifiers ("for some n in Z+") are cut at N_bound(R) = |R|: the
power sequence r, r^2, ... of an element of a finite ring is eventually
periodic with preperiod + period <= |R|, so every value it takes is taken at
some n <= |R|. Every predicate accepts `bound` so tests can cross-check 2|R|.

Witness forms return the smallest violating tuple in canonical element
order; the boolean forms wrap them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from grading_core.errors import InvalidArgument, NotGraded
from grading_core.ring import FiniteGradedRing
from grading_core.tables import first_ungraded, format_labels, graded_lattice, span

# Entries per memoized lattice/predicate function; old catalog structures fall out.
CACHE_SIZE = 2048


@dataclass(frozen=True)
class GradedIdeal:
    ring: FiniteGradedRing
    elements: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_proper(self) -> bool:
        return self.ring.one not in self.elements

    @property
    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def label(self) -> str:
        return format_labels(self.elements, self.ring.labels)

    def issubset(self, other: GradedIdeal) -> bool:
        return self.elements <= other.elements


class PairWitness(NamedTuple):
    r: int
    s: int


class PowerWitness(NamedTuple):
    r: int
    s: int
    n: int


def _bound(ring: FiniteGradedRing, bound: int | None) -> int:
    return ring.order if bound is None else bound


def ideal_closure(ring: FiniteGradedRing, gens) -> GradedIdeal:
    """Smallest ideal containing `gens`; raises NotGraded if it is not graded."""
    gens = tuple(sorted(set(gens)))
    for g in gens:
        if not 0 <= g < ring.order:
            raise InvalidArgument(f"{g} is not an element of {ring.name}")
    members = span(ring.add, ring.mul, ring.zero, gens)
    bad = first_ungraded(members, ring.decomposition)
    if bad is not None:
        x, part = bad
        raise NotGraded(
            f"ideal generated by {format_labels(gens, ring.labels)} is not graded: "
            f"{ring.labels[x]} has component {ring.labels[part]} outside it",
            witness=bad,
        )
    return GradedIdeal(ring, members, gens)


def zero_ideal(ring: FiniteGradedRing) -> GradedIdeal:
    return GradedIdeal(ring, frozenset({ring.zero}))


def unit_ideal(ring: FiniteGradedRing) -> GradedIdeal:
    return GradedIdeal(ring, frozenset(range(ring.order)), (ring.one,))


@lru_cache(maxsize=CACHE_SIZE)
def enumerate_graded_ideals(ring: FiniteGradedRing) -> tuple[GradedIdeal, ...]:
    """All graded ideals, sorted by size then by element list."""
    nonzero = [h for h in ring.homogeneous_values if h != ring.zero]
    return tuple(
        GradedIdeal(ring, members)
        for members in graded_lattice(ring.add, ring.mul, ring.zero, nonzero)
    )


def ideal_product(a: GradedIdeal, b: GradedIdeal) -> GradedIdeal:
    ring = a.ring
    products = {ring.mul[x][y] for x in a.elements for y in b.elements}
    return ideal_closure(ring, products)


def ideal_intersection(a: GradedIdeal, b: GradedIdeal) -> GradedIdeal:
    return GradedIdeal(a.ring, a.elements & b.elements)


def ideal_power(ideal: GradedIdeal, k: int) -> GradedIdeal:
    """I^k for k >= 1. I^0 = R is deliberately not offered."""
    if k < 1:
        raise InvalidArgument(f"ideal power needs k >= 1, got {k}")
    result = ideal
    for _ in range(k - 1):
        result = ideal_product(result, ideal)
    return result


@lru_cache(maxsize=CACHE_SIZE)
def power_chain(ideal: GradedIdeal) -> tuple[GradedIdeal, ...]:
    """I, I^2, ... up to the first k with I^(k+1) = I^k."""
    chain = [ideal]
    while True:
        nxt = ideal_product(chain[-1], ideal)
        if nxt == chain[-1]:
            return tuple(chain)
        chain.append(nxt)


def prime_ideal_witness(ideal: GradedIdeal) -> PairWitness | None:
    ring = ideal.ring
    h = ring.homogeneous_values
    for r in h:
        if r in ideal:
            continue
        for s in h:
            if s not in ideal and ring.mul[r][s] in ideal:
                return PairWitness(r, s)
    return None


def is_graded_prime_ideal(ideal: GradedIdeal) -> bool:
    return ideal.is_proper and prime_ideal_witness(ideal) is None


@lru_cache(maxsize=CACHE_SIZE)
def semiprime_ideal_witness(ideal: GradedIdeal, bound: int | None = None) -> PowerWitness | None:
    ring = ideal.ring
    top = _bound(ring, bound)
    h = ring.homogeneous_values
    mul = ring.mul
    for r in h:
        for s in h:
            if mul[r][s] in ideal:
                continue
            for n in range(2, top + 1):
                if mul[ring.power(r, n)][s] in ideal:
                    return PowerWitness(r, s, n)
    return None


def is_graded_semiprime_ideal(ideal: GradedIdeal, bound: int | None = None) -> bool:
    return ideal.is_proper and semiprime_ideal_witness(ideal, bound) is None


def primary_ideal_witness(ideal: GradedIdeal, bound: int | None = None) -> PairWitness | None:
    ring = ideal.ring
    top = _bound(ring, bound)
    h = ring.homogeneous_values
    for r in h:
        if r in ideal:
            continue
        for s in h:
            if ring.mul[r][s] not in ideal:
                continue
            if not any(ring.power(s, n) in ideal for n in range(1, top + 1)):
                return PairWitness(r, s)
    return None


def is_graded_primary_ideal(ideal: GradedIdeal, bound: int | None = None) -> bool:
    return ideal.is_proper and primary_ideal_witness(ideal, bound) is None


def is_graded_maximal_ideal(ideal: GradedIdeal) -> bool:
    if not ideal.is_proper:
        return False
    whole = ideal.ring.order
    return not any(
        ideal.elements < other.elements and len(other) < whole
        for other in enumerate_graded_ideals(ideal.ring)
    )


def graded_radical(ideal: GradedIdeal, bound: int | None = None) -> GradedIdeal:
    """
    Gr(I): the ideal generated by homogeneous r with r^n in I for some n.

    The standard graded radical; the text that uses Gr(.) never defines it.
    """
    ring = ideal.ring
    top = _bound(ring, bound)
    roots = [
        r
        for r in ring.homogeneous_values
        if any(ring.power(r, n) in ideal for n in range(1, top + 1))
    ]
    return ideal_closure(ring, roots)
