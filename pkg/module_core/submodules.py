"""
Graded submodules as explicit element sets.

Membership and equality are set operations; generators are kept only as
metadata for reports. Enumerations come out in canonical order: size, then
the sorted element list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from grading_core.errors import InvalidArgument, InvariantBreach, NotGraded
from grading_core.ideals import CACHE_SIZE, GradedIdeal
from grading_core.tables import first_ungraded, format_labels, graded_lattice, span
from module_core.maps import map_violation
from module_core.module import GradedModule


@dataclass(frozen=True)
class GradedSubmodule:
    module: GradedModule
    elements: frozenset[int]
    generators: tuple[int, ...] = field(default=(), compare=False)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.module.order

    @property
    def is_zero(self) -> bool:
        return len(self.elements) == 1

    @property
    def sorted_elements(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    @property
    def label(self) -> str:
        return format_labels(self.elements, self.module.labels)

    def issubset(self, other: GradedSubmodule) -> bool:
        return self.elements <= other.elements


def submodule_closure(module: GradedModule, gens) -> GradedSubmodule:
    """Smallest submodule containing `gens`; raises NotGraded if it is not graded."""
    gens = tuple(sorted(set(gens)))
    for g in gens:
        if not 0 <= g < module.order:
            raise InvalidArgument(f"{g} is not an element of {module.name}")
    members = span(module.add, module.action, module.zero, gens)
    bad = first_ungraded(members, module.decomposition)
    if bad is not None:
        x, part = bad
        raise NotGraded(
            f"submodule generated by {format_labels(gens, module.labels)} is not graded: "
            f"{module.labels[x]} has component {module.labels[part]} outside it",
            witness=bad,
        )
    return GradedSubmodule(module, members, gens)


def zero_submodule(module: GradedModule) -> GradedSubmodule:
    return GradedSubmodule(module, frozenset({module.zero}))


def whole_module(module: GradedModule) -> GradedSubmodule:
    return GradedSubmodule(module, frozenset(range(module.order)))


@lru_cache(maxsize=CACHE_SIZE)
def enumerate_graded_submodules(module: GradedModule) -> tuple[GradedSubmodule, ...]:
    """All graded submodules including {0} and M, in canonical order."""
    nonzero = [h for h in module.homogeneous_values if h != module.zero]
    return tuple(
        GradedSubmodule(module, members)
        for members in graded_lattice(module.add, module.action, module.zero, nonzero)
    )


def _checked_ideal(module: GradedModule, members: frozenset[int], what: str) -> GradedIdeal:
    ring = module.ring
    if first_ungraded(members, ring.decomposition) is not None:
        raise InvariantBreach(f"{what} over {module.name} is not a graded ideal")
    return GradedIdeal(ring, members)


@lru_cache(maxsize=CACHE_SIZE)
def colon_ideal(sub: GradedSubmodule, module: GradedModule | None = None) -> GradedIdeal:
    """(N :_R M) = {r in R : rM in N}."""
    module = sub.module if module is None else module
    if module is not sub.module:
        raise InvalidArgument("submodule does not belong to this module")
    act = module.action
    inside = sub.elements
    members = frozenset(
        r
        for r in range(module.ring.order)
        if all(act[r][m] in inside for m in range(module.order))
    )
    ideal = _checked_ideal(module, members, "colon ideal")
    if sub.is_proper and not ideal.is_proper:
        raise InvariantBreach("colon ideal of a proper submodule contains 1")
    return ideal


@lru_cache(maxsize=CACHE_SIZE)
def annihilator(sub: GradedSubmodule) -> GradedIdeal:
    """Ann_R(K) = {r : rK = 0}, the colon ({0} : K) with K viewed as a module."""
    module = sub.module
    act = module.action
    members = frozenset(
        r
        for r in range(module.ring.order)
        if all(act[r][k] == module.zero for k in sub.elements)
    )
    return _checked_ideal(module, members, "annihilator")


def ideal_times_module(ideal: GradedIdeal, module: GradedModule) -> GradedSubmodule:
    """IM, the submodule generated by all a*m with a in I."""
    act = module.action
    products = {act[a][m] for a in ideal.elements for m in range(module.order)}
    return submodule_closure(module, products)


def intersection(a: GradedSubmodule, b: GradedSubmodule) -> GradedSubmodule:
    return GradedSubmodule(a.module, a.elements & b.elements)


def submodule_sum(a: GradedSubmodule, b: GradedSubmodule) -> GradedSubmodule:
    module = a.module
    members = span(module.add, module.action, module.zero, b.elements, base=a.elements)
    return GradedSubmodule(module, members)


def submodule_as_module(sub: GradedSubmodule) -> tuple[GradedModule, tuple[int, ...]]:
    """N as a module in its own right, plus the inclusion table N -> M."""
    module = sub.module
    members = sub.sorted_elements
    index = {x: i for i, x in enumerate(members)}
    restricted = GradedModule(
        name=f"{sub.label} in {module.name}",
        ring=module.ring,
        add=tuple(tuple(index[module.add[x][y]] for y in members) for x in members),
        action=tuple(
            tuple(index[module.action[r][x]] for x in members) for r in range(module.ring.order)
        ),
        zero=index[module.zero],
        components=tuple(
            frozenset(index[x] for x in comp if x in index) for comp in module.components
        ),
        labels=tuple(module.labels[x] for x in members),
        coords=tuple(module.coords[x] for x in members),
        trusted=True,
    )
    return restricted, members


def quotient_module(
    module: GradedModule, sub: GradedSubmodule
) -> tuple[GradedModule, tuple[int, ...]]:
    """
    M/K with (M/K)_g = (M_g + K)/K, plus the projection table M -> M/K.

    Cosets are numbered by their smallest member. The projection is checked to
    be a graded epimorphism with kernel exactly K before anything is returned.
    """
    if sub.module is not module:
        raise InvalidArgument("submodule does not belong to this module")
    rep: dict[int, int] = {}
    reps: list[int] = []
    for x in range(module.order):
        if x in rep:
            continue
        for y in sub.elements:
            rep[module.add[x][y]] = x
        reps.append(x)
    slot = {r: i for i, r in enumerate(reps)}
    proj = tuple(slot[rep[x]] for x in range(module.order))
    quotient = GradedModule(
        name=f"{module.name} / {sub.label}",
        ring=module.ring,
        add=tuple(tuple(proj[module.add[a][b]] for b in reps) for a in reps),
        action=tuple(
            tuple(proj[module.action[r][a]] for a in reps) for r in range(module.ring.order)
        ),
        zero=proj[module.zero],
        components=tuple(frozenset(proj[x] for x in comp) for comp in module.components),
        labels=tuple(f"[{module.labels[a]}]" for a in reps),
        coords=tuple(module.coords[a] for a in reps),
        trusted=True,
    )
    broken = map_violation(module, quotient, proj)
    if broken is not None:
        raise InvariantBreach(f"projection onto {quotient.name} breaks the {broken.law} law")
    kernel = frozenset(x for x in range(module.order) if proj[x] == quotient.zero)
    if kernel != sub.elements:
        raise InvariantBreach(f"projection onto {quotient.name} has the wrong kernel")
    return quotient, proj
