"""
Submodule- and module-level predicates.

Each predicate that can fail with a certificate has a `*_check` form returning
(verdict, witness) and an `is_*` form returning the bare verdict. Witnesses are
the smallest violating tuple in canonical element order, so reports built on
them are deterministic.
"""

from __future__ import annotations

from typing import NamedTuple

from grading_core.errors import InvalidArgument
from grading_core.ideals import (
    GradedIdeal,
    PowerWitness,
    enumerate_graded_ideals,
    is_graded_semiprime_ideal,
    power_chain,
    semiprime_ideal_witness,
)
from module_core.module import GradedModule
from module_core.submodules import (
    GradedSubmodule,
    annihilator,
    colon_ideal,
    enumerate_graded_submodules,
    ideal_times_module,
    zero_submodule,
)


class SemiprimeWitness(NamedTuple):
    r: int
    m: int
    n: int


class IdealPowerWitness(NamedTuple):
    ideal: GradedIdeal
    k: int


def _bound(module: GradedModule, bound: int | None) -> int:
    return module.ring.order if bound is None else bound


def semiprime_submodule_witness(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> SemiprimeWitness | None:
    """Smallest (r, m, n) over h(R) x h(M) with r^n m in N but rm not in N."""
    ring = module.ring
    top = _bound(module, bound)
    act = module.action
    for r in ring.homogeneous_values:
        for m in module.homogeneous_values:
            if act[r][m] in sub:
                continue
            for n in range(2, top + 1):
                if act[ring.power(r, n)][m] in sub:
                    return SemiprimeWitness(r, m, n)
    return None


def semiprime_submodule_check(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> tuple[bool, SemiprimeWitness | None]:
    if not sub.is_proper:
        return False, None
    witness = semiprime_submodule_witness(sub, module, bound)
    return witness is None, witness


def is_graded_semiprime_submodule(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> bool:
    return semiprime_submodule_check(sub, module, bound)[0]


def quasi_semiprime_check(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> tuple[bool, PowerWitness | None]:
    """N is quasi-semiprime when it is proper and (N:M) is a graded semiprime ideal."""
    if not sub.is_proper:
        return False, None
    colon = colon_ideal(sub, module)
    witness = semiprime_ideal_witness(colon, bound)
    return witness is None, witness


def is_graded_quasi_semiprime_submodule(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> bool:
    return sub.is_proper and is_graded_semiprime_ideal(colon_ideal(sub, module), bound)


def multiplication_check(module: GradedModule) -> tuple[bool, GradedSubmodule | None]:
    """
    M is a graded multiplication module iff N = (N:M)M for every graded N.

    IM in N forces I in (N:M), hence IM in (N:M)M in N, so the single colon
    test per submodule decides the existential "N = IM for some I".
    """
    for sub in enumerate_graded_submodules(module):
        rebuilt = ideal_times_module(colon_ideal(sub, module), module)
        if rebuilt.elements != sub.elements:
            return False, sub
    return True, None


def is_graded_multiplication_module(module: GradedModule) -> bool:
    return multiplication_check(module)[0]


def ideal_power_criterion(
    sub: GradedSubmodule, module: GradedModule
) -> tuple[bool, IdealPowerWitness | None]:
    """
    For every graded I and k up to the stabilisation of I, I^2, ...:
    I^k M in N implies IM in N. On failure returns the first (I, k).
    """
    for ideal in enumerate_graded_ideals(module.ring):
        if ideal_times_module(ideal, module).elements <= sub.elements:
            continue
        for k, power in enumerate(power_chain(ideal), start=1):
            if ideal_times_module(power, module).elements <= sub.elements:
                return False, IdealPowerWitness(ideal, k)
    return True, None


def is_graded_semiprime_module(module: GradedModule, bound: int | None = None) -> bool:
    """(0) is a graded semiprime submodule of M."""
    if module.is_zero:
        raise InvalidArgument("the zero module has no proper submodule (0)")
    return is_graded_semiprime_submodule(zero_submodule(module), module, bound)


def quasi_semiprime_module_check(
    module: GradedModule, bound: int | None = None
) -> tuple[bool, GradedSubmodule | None]:
    """Ann_R(N) must be graded semiprime for every nonzero graded N."""
    if module.is_zero:
        raise InvalidArgument("quasi-semiprime modules must be nonzero")
    for sub in enumerate_graded_submodules(module):
        if sub.is_zero:
            continue
        if not is_graded_semiprime_ideal(annihilator(sub), bound):
            return False, sub
    return True, None


def is_graded_quasi_semiprime_module(module: GradedModule, bound: int | None = None) -> bool:
    return quasi_semiprime_module_check(module, bound)[0]
