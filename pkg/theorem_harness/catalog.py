"""
Deterministic catalogs of finite graded rings and modules.

Every profile is a frozen dataclass; building one always produces the same
structures in the same order, so reports over a catalog are reproducible.
Every construction must succeed; a rejected one is a bug and propagates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import NamedTuple

from grading_core.errors import InvalidArgument
from grading_core.group import GradingGroup, cyclic_group
from grading_core.ring import FiniteGradedRing, make_cyclic_ring, make_quotient_poly_ring
from integer_backend.zmodule import ZModuleInstance, ZSubmodule, ZWitness
from module_core.module import GradedModule, direct_sum, product_module, ring_as_module
from module_core.submodules import enumerate_graded_submodules, quotient_module

logger = logging.getLogger("graded.catalog")


@dataclass(frozen=True)
class CatalogProfile:
    name: str
    cyclic_orders: tuple[int, ...]
    # (n, c): Z_n[x]/(x^2 - c) with x of degree 1
    poly_params: tuple[tuple[int, int], ...]
    max_factors: int
    max_module_order: int
    quotients: bool = True


PROFILES: dict[str, CatalogProfile] = {
    "small": CatalogProfile(
        name="small",
        cyclic_orders=(2, 4, 6, 8),
        poly_params=((2, 0), (2, 1)),
        max_factors=2,
        max_module_order=8,
    ),
    "default": CatalogProfile(
        name="default",
        cyclic_orders=(2, 3, 4, 6, 8, 9, 12),
        poly_params=((2, 0), (2, 1), (3, 1), (4, 0)),
        max_factors=2,
        max_module_order=16,
    ),
    "extended": CatalogProfile(
        name="extended",
        cyclic_orders=(2, 3, 4, 5, 6, 8, 9, 10, 12, 16),
        poly_params=((2, 0), (2, 1), (3, 1), (3, 2), (4, 0), (4, 1)),
        max_factors=2,
        max_module_order=32,
    ),
}


class ZExample(NamedTuple):
    name: str
    module: ZModuleInstance
    submodule: ZSubmodule
    # certificate that the submodule is not semiprime, when one is known
    witness: ZWitness | None


@dataclass(frozen=True)
class Catalog:
    profile: str
    rings: tuple[FiniteGradedRing, ...]
    modules: tuple[GradedModule, ...]
    z_examples: tuple[ZExample, ...]


def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def _product_shapes(n: int, profile: CatalogProfile) -> list[list[tuple[int, int]]]:
    divisors = _divisors(n)
    shapes: list[list[tuple[int, int]]] = []
    # Z_n(0) alone is R itself; it is already in the catalog as ring-as-module.
    shapes += [[(d, 0)] for d in divisors if d != n and d <= profile.max_module_order]
    shapes += [[(d, 1)] for d in divisors if d <= profile.max_module_order]
    if profile.max_factors >= 2:
        for i, d1 in enumerate(divisors):
            for d2 in divisors[i:]:
                if d1 * d2 <= profile.max_module_order:
                    shapes.append([(d1, 0), (d2, 0)])
        for d1 in divisors:
            for d2 in divisors:
                if d1 * d2 <= profile.max_module_order:
                    shapes.append([(d1, 0), (d2, 1)])
    return shapes


def _reference_z_examples(group: GradingGroup) -> tuple[ZExample, ...]:
    plane = ZModuleInstance(2, (), (0, 1), group)
    z8 = ZModuleInstance(0, (8,), (0,), group)
    return (
        ZExample("4Z x 0 in Z x Z", plane, ZSubmodule(plane, ((4, 0),)), ZWitness(2, (3, 0), 2)),
        ZExample("<4> in Z8", z8, ZSubmodule(z8, ((4,),)), ZWitness(2, (1,), 2)),
    )


def build_standard_catalog(profile: str = "default") -> Catalog:
    spec = PROFILES.get(profile)
    if spec is None:
        raise InvalidArgument(
            f"unknown catalog profile {profile!r}; expected one of {', '.join(PROFILES)}"
        )
    group = cyclic_group(2)
    rings: list[FiniteGradedRing] = [make_cyclic_ring(n, group) for n in spec.cyclic_orders]
    rings += [make_quotient_poly_ring(n, c, 1, group) for n, c in spec.poly_params]

    base: list[GradedModule] = []
    for ring in rings:
        base.append(ring_as_module(ring))
        if ring.modulus is not None:
            for shape in _product_shapes(ring.modulus, spec):
                base.append(product_module(shape, ring))
            continue
        # Polynomial rings: the shifted copy, and sums of two copies when small enough.
        shifted = ring_as_module(ring, shift=1)
        base.append(shifted)
        if ring.order * ring.order <= spec.max_module_order:
            base.append(direct_sum(ring_as_module(ring), ring_as_module(ring)))
            base.append(direct_sum(ring_as_module(ring), shifted))

    modules = list(base)
    if spec.quotients:
        for module in base:
            for sub in enumerate_graded_submodules(module):
                if sub.is_zero or not sub.is_proper:
                    continue
                modules.append(quotient_module(module, sub)[0])

    catalog = Catalog(
        profile=spec.name,
        rings=tuple(rings),
        modules=tuple(modules),
        z_examples=_reference_z_examples(group),
    )
    logger.info(
        "catalog %s: %d rings, %d modules (%d quotients), %d Z-examples",
        spec.name,
        len(catalog.rings),
        len(catalog.modules),
        len(modules) - len(base),
        len(catalog.z_examples),
    )
    return catalog
