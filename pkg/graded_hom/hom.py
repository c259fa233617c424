"""
Graded homomorphisms f: M -> M' over one ring, with f(M_a) in M'_a.

`make_hom` is the only checked entry point; each broken law raises its own
error variant with the offending elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from grading_core.errors import AlgebraError, InvalidArgument
from grading_core.ring import same_ring
from grading_core.tables import span
from module_core.maps import map_violation
from module_core.module import GradedModule
from module_core.submodules import (
    GradedSubmodule,
    quotient_module,
    submodule_as_module,
    submodule_closure,
    whole_module,
)


class HomError(AlgebraError):
    """Raised when a table is not a graded homomorphism."""


class NotAdditive(HomError):
    pass


class NotLinear(HomError):
    pass


class NotGradedMap(HomError):
    pass


@dataclass(frozen=True, eq=False)
class GradedHomomorphism:
    source: GradedModule
    target: GradedModule
    table: tuple[int, ...]
    name: str = "f"

    def __call__(self, x: int) -> int:
        return self.table[x]


def make_hom(
    source: GradedModule, target: GradedModule, table: Sequence[int], name: str = "f"
) -> GradedHomomorphism:
    if not same_ring(source.ring, target.ring):
        raise InvalidArgument("source and target must be modules over the same ring")
    table = tuple(int(y) for y in table)
    broken = map_violation(source, target, table)
    if broken is not None:
        if broken.law == "shape":
            raise InvalidArgument(
                f"map table does not send {source.name} into {target.name}",
                witness=broken.witness,
            )
        if broken.law == "additive":
            x, y = broken.witness
            raise NotAdditive(
                f"f({source.labels[x]} + {source.labels[y]}) != f({source.labels[x]}) + "
                f"f({source.labels[y]})",
                witness=broken.witness,
            )
        if broken.law == "linear":
            r, x = broken.witness
            raise NotLinear(
                f"f({source.ring.labels[r]}*{source.labels[x]}) != "
                f"{source.ring.labels[r]}*f({source.labels[x]})",
                witness=broken.witness,
            )
        x, g = broken.witness
        raise NotGradedMap(
            f"{source.labels[x]} has degree {source.ring.group.name(g)} but its image does not",
            witness=broken.witness,
        )
    return GradedHomomorphism(source, target, table, name)


def kernel(f: GradedHomomorphism) -> GradedSubmodule:
    zero = f.target.zero
    return GradedSubmodule(
        f.source, frozenset(x for x in range(f.source.order) if f.table[x] == zero)
    )


def _checked_submodule(sub: GradedSubmodule, module: GradedModule, role: str) -> GradedSubmodule:
    """InvalidArgument for a foreign or unclosed set, NotGraded for an ungraded one."""
    if sub.module is not module:
        raise InvalidArgument(f"{role} {sub.label} is not a submodule of {module.name}")
    closed = submodule_closure(module, sub.elements)
    if closed.elements != sub.elements:
        raise InvalidArgument(f"{role} {sub.label} is not closed in {module.name}")
    return sub


def image(f: GradedHomomorphism, sub: GradedSubmodule | None = None) -> GradedSubmodule:
    """f(N); graded because f preserves degrees and N is generated by homogeneous elements."""
    if sub is None:
        members: Iterable[int] = range(f.source.order)
    else:
        members = _checked_submodule(sub, f.source, "argument").elements
    return GradedSubmodule(f.target, frozenset(f.table[x] for x in members))


def preimage(f: GradedHomomorphism, sub: GradedSubmodule) -> GradedSubmodule:
    wanted = _checked_submodule(sub, f.target, "argument").elements
    return GradedSubmodule(
        f.source, frozenset(x for x in range(f.source.order) if f.table[x] in wanted)
    )


def is_epimorphism(f: GradedHomomorphism) -> bool:
    return image(f) == whole_module(f.target)


def identity_hom(module: GradedModule) -> GradedHomomorphism:
    return make_hom(module, module, range(module.order), name="id")


def zero_hom(source: GradedModule, target: GradedModule) -> GradedHomomorphism:
    return make_hom(source, target, [target.zero] * source.order, name="0")


def inclusion(sub: GradedSubmodule) -> GradedHomomorphism:
    restricted, members = submodule_as_module(sub)
    return make_hom(restricted, sub.module, members, name="incl")


def quotient_projection(
    module: GradedModule, sub: GradedSubmodule
) -> tuple[GradedModule, GradedHomomorphism]:
    quotient, proj = quotient_module(module, sub)
    return quotient, make_hom(module, quotient, proj, name=f"proj {sub.label}")


def homogeneous_generators(module: GradedModule) -> tuple[int, ...]:
    """Greedy generating set of homogeneous elements in canonical order."""
    gens: list[int] = []
    reached = frozenset({module.zero})
    for h in module.homogeneous_values:
        if h in reached:
            continue
        gens.append(h)
        reached = span(module.add, module.action, module.zero, (h,), base=reached)
        if len(reached) == module.order:
            break
    return tuple(gens)


def _extend(
    source: GradedModule, target: GradedModule, gens: Sequence[int], images: Sequence[int]
) -> tuple[int, ...] | None:
    """The unique additive, linear extension of gens -> images, if one exists."""
    table = {source.zero: target.zero}
    frontier = [source.zero]
    ring_order = source.ring.order
    while frontier:
        x = frontier.pop()
        fx = table[x]
        for g, img in zip(gens, images):
            for r in range(ring_order):
                y = source.add[x][source.action[r][g]]
                value = target.add[fx][target.action[r][img]]
                seen = table.get(y)
                if seen is None:
                    table[y] = value
                    frontier.append(y)
                elif seen != value:
                    return None
    return tuple(table[x] for x in range(source.order))


def graded_homomorphisms(
    source: GradedModule, target: GradedModule | None = None
) -> Iterator[GradedHomomorphism]:
    """
    Every graded homomorphism source -> target.

    A graded hom is fixed by where it sends a homogeneous generating set, and a
    degree-g generator must land in M'_g, so only those assignments are tried.
    """
    target = source if target is None else target
    gens = homogeneous_generators(source)
    choices = [sorted(target.components[source.degrees[g]]) for g in gens]
    for number, images in enumerate(itertools.product(*choices)):
        table = _extend(source, target, gens, images)
        if table is None or map_violation(source, target, table) is not None:
            continue
        yield GradedHomomorphism(source, target, table, name=f"endo#{number}")
