"""
Definitional oracles for regression checking.

Nothing here uses the optimized predicates, caches or lattice enumeration:
ideals and submodules come from filtering raw subsets, powers are computed by
repeated multiplication up to 2|R|, and the multiplication-module test is the
existential "N = IM for some graded I" form. Slow on purpose, so it is bounded.
"""

from __future__ import annotations

from typing import Any, Iterable

import config
from grading_core.errors import InvalidArgument, Unsupported
from grading_core.ring import FiniteGradedRing
from grading_core.tables import Table, canonical_key
from module_core.module import GradedModule

PREDICATE_IDS = (
    "semiprime-ideal",
    "prime-ideal",
    "primary-ideal",
    "maximal-ideal",
    "semiprime",
    "quasi-semiprime",
    "multiplication",
    "envelope",
    "ideal-power",
    "semiprime-module",
    "quasi-semiprime-module",
)


def _subset_filter(
    size: int, zero: int, add: Table, act: Table, scalars: int, parts: Iterable
) -> list[frozenset[int]]:
    """Every subset containing zero, closed under + and the action, holding the components of its members."""
    parts = tuple(parts)
    found: list[frozenset[int]] = []
    others = [x for x in range(size) if x != zero]
    for mask in range(1 << len(others)):
        members = {zero} | {x for i, x in enumerate(others) if mask >> i & 1}
        if any(add[x][y] not in members for x in members for y in members):
            continue
        if any(act[r][x] not in members for r in range(scalars) for x in members):
            continue
        if any(p not in members for x in members for p in parts[x]):
            continue
        found.append(frozenset(members))
    found.sort(key=canonical_key)
    return found


def brute_force_graded_ideals(ring: FiniteGradedRing) -> list[frozenset[int]]:
    return _subset_filter(ring.order, ring.zero, ring.add, ring.mul, ring.order, ring.decomposition)


def brute_force_graded_submodules(module: GradedModule) -> list[frozenset[int]]:
    return _subset_filter(
        module.order, module.zero, module.add, module.action, module.ring.order,
        module.decomposition,
    )


def _power(ring: FiniteGradedRing, r: int, n: int) -> int:
    out = ring.one
    for _ in range(n):
        out = ring.mul[out][r]
    return out


def _homogeneous(components: Iterable[frozenset[int]]) -> list[int]:
    return sorted(set().union(*components))


def _semiprime_ideal(ring: FiniteGradedRing, ideal: frozenset[int]) -> bool:
    if len(ideal) == ring.order:
        return False
    h = _homogeneous(ring.components)
    top = 2 * ring.order
    for r in h:
        for s in h:
            for n in range(1, top + 1):
                if ring.mul[_power(ring, r, n)][s] in ideal and ring.mul[r][s] not in ideal:
                    return False
    return True


def _prime_ideal(ring: FiniteGradedRing, ideal: frozenset[int]) -> bool:
    if len(ideal) == ring.order:
        return False
    h = _homogeneous(ring.components)
    return all(
        r in ideal or s in ideal for r in h for s in h if ring.mul[r][s] in ideal
    )


def _primary_ideal(ring: FiniteGradedRing, ideal: frozenset[int]) -> bool:
    if len(ideal) == ring.order:
        return False
    h = _homogeneous(ring.components)
    top = 2 * ring.order
    for r in h:
        for s in h:
            if ring.mul[r][s] not in ideal or r in ideal:
                continue
            if not any(_power(ring, s, n) in ideal for n in range(1, top + 1)):
                return False
    return True


def _maximal_ideal(ring: FiniteGradedRing, ideal: frozenset[int]) -> bool:
    if len(ideal) == ring.order:
        return False
    return not any(
        ideal < other and len(other) < ring.order for other in brute_force_graded_ideals(ring)
    )


def _closure(module: GradedModule, seeds: Iterable[int]) -> frozenset[int]:
    members = {module.zero} | set(seeds)
    while True:
        grown = set(members)
        grown |= {module.add[x][y] for x in members for y in members}
        grown |= {module.action[r][x] for r in range(module.ring.order) for x in members}
        if grown == members:
            return frozenset(members)
        members = grown


def _colon(module: GradedModule, sub: frozenset[int], whole: Iterable[int]) -> frozenset[int]:
    whole = list(whole)
    return frozenset(
        r for r in range(module.ring.order) if all(module.action[r][m] in sub for m in whole)
    )


def _semiprime_sub(module: GradedModule, sub: frozenset[int]) -> bool:
    if len(sub) == module.order:
        return False
    ring = module.ring
    top = 2 * ring.order
    for r in _homogeneous(ring.components):
        for m in _homogeneous(module.components):
            for n in range(1, top + 1):
                if (
                    module.action[_power(ring, r, n)][m] in sub
                    and module.action[r][m] not in sub
                ):
                    return False
    return True


def _quasi_semiprime_sub(module: GradedModule, sub: frozenset[int]) -> bool:
    if len(sub) == module.order:
        return False
    return _semiprime_ideal(module.ring, _colon(module, sub, range(module.order)))


def _times(module: GradedModule, ideal: frozenset[int]) -> frozenset[int]:
    return _closure(module, (module.action[a][m] for a in ideal for m in range(module.order)))


def _multiplication(module: GradedModule) -> bool:
    products = {_times(module, ideal) for ideal in brute_force_graded_ideals(module.ring)}
    return all(sub in products for sub in brute_force_graded_submodules(module))


def _equals_envelope(module: GradedModule, sub: frozenset[int]) -> bool:
    ring = module.ring
    top = 2 * ring.order
    generated = {
        module.action[r][m]
        for r in _homogeneous(ring.components)
        for m in _homogeneous(module.components)
        if any(module.action[_power(ring, r, n)][m] in sub for n in range(1, top + 1))
    }
    return _closure(module, generated) == sub


def _ideal_product(ring: FiniteGradedRing, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
    members = {ring.zero} | {ring.mul[x][y] for x in a for y in b}
    while True:
        grown = members | {ring.add[x][y] for x in members for y in members}
        if grown == members:
            return frozenset(members)
        members = grown


def _ideal_powers_hold(module: GradedModule, sub: frozenset[int]) -> bool:
    ring = module.ring
    for ideal in brute_force_graded_ideals(ring):
        if _times(module, ideal) <= sub:
            continue
        power = ideal
        for _ in range(2 * ring.order):
            power = _ideal_product(ring, power, ideal)
            if _times(module, power) <= sub:
                return False
    return True


def _semiprime_module(module: GradedModule) -> bool:
    return _semiprime_sub(module, frozenset({module.zero}))


def _quasi_semiprime_module(module: GradedModule) -> bool:
    for sub in brute_force_graded_submodules(module):
        if len(sub) == 1:
            continue
        annihilator = frozenset(
            r
            for r in range(module.ring.order)
            if all(module.action[r][k] == module.zero for k in sub)
        )
        if not _semiprime_ideal(module.ring, annihilator):
            return False
    return True


def _require(instance: dict[str, Any], key: str) -> Any:
    if key not in instance:
        raise InvalidArgument(f"oracle instance is missing {key!r}")
    return instance[key]


def _check_bounds(ring: FiniteGradedRing, module: GradedModule | None) -> None:
    if ring.order > config.ORACLE_MAX_RING:
        raise Unsupported(
            f"naive oracle handles rings up to {config.ORACLE_MAX_RING}, got {ring.order}"
        )
    if module is not None and module.order > config.ORACLE_MAX_MODULE:
        raise Unsupported(
            f"naive oracle handles modules up to {config.ORACLE_MAX_MODULE}, got {module.order}"
        )


def naive_oracle(predicate_id: str, instance: dict[str, Any]) -> bool:
    """
    instance keys: "ideal" (GradedIdeal) for the ideal predicates, "module"
    plus optionally "submodule" (GradedSubmodule) for the rest.
    """
    if predicate_id not in PREDICATE_IDS:
        raise InvalidArgument(f"unknown predicate {predicate_id!r}")
    if predicate_id.endswith("-ideal"):
        ideal = _require(instance, "ideal")
        _check_bounds(ideal.ring, None)
        verdicts = {
            "semiprime-ideal": _semiprime_ideal,
            "prime-ideal": _prime_ideal,
            "primary-ideal": _primary_ideal,
            "maximal-ideal": _maximal_ideal,
        }
        return verdicts[predicate_id](ideal.ring, ideal.elements)
    module = _require(instance, "module")
    _check_bounds(module.ring, module)
    if predicate_id == "multiplication":
        return _multiplication(module)
    if predicate_id == "semiprime-module":
        return _semiprime_module(module)
    if predicate_id == "quasi-semiprime-module":
        return _quasi_semiprime_module(module)
    sub = _require(instance, "submodule").elements
    if predicate_id == "semiprime":
        return _semiprime_sub(module, sub)
    if predicate_id == "quasi-semiprime":
        return _quasi_semiprime_sub(module, sub)
    if predicate_id == "envelope":
        return _equals_envelope(module, sub)
    return _ideal_powers_hold(module, sub)
