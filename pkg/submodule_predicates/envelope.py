"""
Graded envelope: GE_M(N) = {rm : r in h(R), m in h(M), r^n m in N for some n},
and RGE_M(N), the graded submodule it generates.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

from module_core.module import GradedModule
from module_core.submodules import GradedSubmodule, submodule_closure
from submodule_predicates.predicates import SemiprimeWitness


@dataclass(frozen=True)
class EnvelopeResult:
    generator_set: frozenset[int]
    submodule: GradedSubmodule
    # element -> smallest (r, m, n) with element = rm and r^n m in N
    witnesses: Mapping[int, SemiprimeWitness]


def graded_envelope(
    sub: GradedSubmodule, module: GradedModule, bound: int | None = None
) -> EnvelopeResult:
    ring = module.ring
    top = ring.order if bound is None else bound
    act = module.action
    witnesses: dict[int, SemiprimeWitness] = {}
    for r in ring.homogeneous_values:
        for m in module.homogeneous_values:
            x = act[r][m]
            if x in witnesses:
                continue
            for n in range(1, top + 1):
                if act[ring.power(r, n)][m] in sub:
                    witnesses[x] = SemiprimeWitness(r, m, n)
                    break
    generators = frozenset(witnesses)
    # Members of GE are products of homogeneous elements, so the closure is graded.
    closure = submodule_closure(module, generators)
    return EnvelopeResult(generators, closure, MappingProxyType(dict(sorted(witnesses.items()))))
