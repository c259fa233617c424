"""
Modules Z^a + Z_n1 + ... + Z_nk over the trivially graded ring Z.

R_e = Z and R_g = 0 otherwise, so every integer is homogeneous of degree e and
a vector is homogeneous when its nonzero coordinates all share one degree.
Submodules are subgroups (Z-linear span is all there is), so membership and
colon ideals reduce to lattice arithmetic with the torsion relations n_i e_i
added to the generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence

from sympy import factorint, isprime, primefactors

from grading_core.errors import InvalidArgument, NotGraded, Unsupported
from grading_core.group import GradingGroup
from grading_core.ring import make_cyclic_ring
from integer_backend.lattice import IntegerLattice
from module_core.module import GradedModule, product_module
from module_core.submodules import GradedSubmodule, submodule_closure


class ZWitness(NamedTuple):
    r: int
    m: tuple[int, ...]
    n: int


@dataclass(frozen=True)
class ZModuleInstance:
    free_rank: int
    torsion_orders: tuple[int, ...]
    degrees: tuple[int, ...]
    group: GradingGroup

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion_orders", tuple(int(n) for n in self.torsion_orders))
        object.__setattr__(self, "degrees", tuple(int(g) for g in self.degrees))
        if self.free_rank < 0:
            raise InvalidArgument(f"free rank must be >= 0, got {self.free_rank}")
        for n in self.torsion_orders:
            if n < 2:
                raise InvalidArgument(f"torsion orders must be >= 2, got {n}")
        if self.arity == 0:
            raise InvalidArgument("a Z-module instance needs at least one factor")
        if len(self.degrees) != self.arity:
            raise InvalidArgument(
                f"expected {self.arity} factor degrees, got {len(self.degrees)}"
            )
        for g in self.degrees:
            if not self.group.contains(g):
                raise InvalidArgument(f"degree {g} is not an element of the grading group")

    @property
    def arity(self) -> int:
        return self.free_rank + len(self.torsion_orders)

    @property
    def moduli(self) -> tuple[int, ...]:
        """0 for a free coordinate, n_i for a torsion one."""
        return (0,) * self.free_rank + self.torsion_orders

    @property
    def name(self) -> str:
        names = self.group.name
        parts = [f"Z({names(g)})" for g in self.degrees[: self.free_rank]]
        parts += [
            f"Z{n}({names(g)})"
            for n, g in zip(self.torsion_orders, self.degrees[self.free_rank :])
        ]
        return "+".join(parts) + " over Z"

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.arity:
            raise InvalidArgument(f"vector has {len(v)} coordinates, {self.name} has {self.arity}")
        return tuple(int(x) % n if n else int(x) for x, n in zip(v, self.moduli))

    def degree_of(self, v: Sequence[int]) -> int | None:
        """Degree of a homogeneous vector (e for zero), None when it is not homogeneous."""
        seen = {g for x, g in zip(self.reduce(v), self.degrees) if x}
        if not seen:
            return self.group.identity
        return seen.pop() if len(seen) == 1 else None

    def is_homogeneous(self, v: Sequence[int]) -> bool:
        return self.degree_of(v) is not None

    def component(self, v: Sequence[int], g: int) -> tuple[int, ...]:
        return tuple(x if d == g else 0 for x, d in zip(self.reduce(v), self.degrees))

    def basis(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(1 if i == j else 0 for i in range(self.arity)) for j in range(self.arity)
        )

    def homogeneous_vectors(self, bound: int) -> Iterator[tuple[int, ...]]:
        """
        Homogeneous vectors with free coordinates in [-bound, bound] and torsion
        coordinates reduced, smallest absolute size first, positives before negatives.
        """
        ranges = [
            range(-bound, bound + 1) if n == 0 else range(n) for n in self.moduli
        ]
        candidates = [v for v in itertools.product(*ranges) if self.is_homogeneous(v)]
        candidates.sort(key=lambda v: (sum(abs(x) for x in v), [(abs(x), x < 0) for x in v]))
        return iter(candidates)


@dataclass(frozen=True)
class ZIdeal:
    c: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", abs(int(self.c)))

    def __contains__(self, r: int) -> bool:
        return r == 0 if self.c == 0 else r % self.c == 0

    @property
    def is_proper(self) -> bool:
        return self.c != 1

    @property
    def label(self) -> str:
        return f"{self.c}Z"


@dataclass(frozen=True)
class ZSubmodule:
    parent: ZModuleInstance
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        gens = tuple(self.parent.reduce(v) for v in self.generators)
        object.__setattr__(self, "generators", gens)
        for v in gens:
            for g in set(self.parent.degrees):
                part = self.parent.component(v, g)
                if part not in self:
                    raise NotGraded(
                        f"generator {v} has component {part} outside the submodule",
                        witness=(v, part),
                    )

    @cached_property
    def lattice(self) -> IntegerLattice:
        relations = [
            tuple(n if i == j else 0 for i in range(self.parent.arity))
            for j, n in enumerate(self.parent.moduli)
            if n
        ]
        return IntegerLattice(self.parent.arity, [*self.generators, *relations])

    def __contains__(self, v: Sequence[int]) -> bool:
        return tuple(int(x) for x in v) in self.lattice

    @property
    def label(self) -> str:
        if not self.generators:
            return "<0>"
        return "<" + ", ".join(
            str(v[0]) if len(v) == 1 else "(" + ",".join(map(str, v)) + ")"
            for v in self.generators
        ) + ">"


def z_membership(sub: ZSubmodule, v: Sequence[int]) -> bool:
    if len(v) != sub.parent.arity:
        raise InvalidArgument(
            f"vector has {len(v)} coordinates, {sub.parent.name} has {sub.parent.arity}"
        )
    return v in sub


def _owned(sub: ZSubmodule, module: ZModuleInstance | None) -> ZModuleInstance:
    module = sub.parent if module is None else module
    if module != sub.parent:
        raise InvalidArgument("submodule does not belong to this module")
    return module


def z_colon_ideal(sub: ZSubmodule, module: ZModuleInstance | None = None) -> ZIdeal:
    """(N :_Z M): lcm of the per-axis generators c_j with r e_j in N iff c_j | r."""
    module = _owned(sub, module)
    c = 1
    for j in range(module.arity):
        cj = sub.lattice.axis_generator(j)
        if cj == 0:
            return ZIdeal(0)
        c = math.lcm(c, cj)
    return ZIdeal(c)


def z_is_semiprime_ideal(ideal: ZIdeal) -> bool:
    if ideal.c == 0:
        return True
    if ideal.c == 1:
        return False
    return all(e == 1 for e in factorint(ideal.c).values())


def z_semiprime_ideal_oracle(ideal: ZIdeal) -> bool:
    """
    Residue brute force: r, s in [0, c), n up to ceil(log2 c) + 1. Exponents
    beyond that cannot matter since every prime valuation of c is at most log2 c.
    """
    c = ideal.c
    if c < 2:
        raise InvalidArgument(f"residue oracle needs c >= 2, got {c}")
    top = (c - 1).bit_length() + 1
    for r in range(c):
        for s in range(c):
            if (r * s) % c == 0:
                continue
            if any(pow(r, n, c) * s % c == 0 for n in range(2, top + 1)):
                return False
    return True


def z_is_prime_ideal(ideal: ZIdeal) -> bool:
    return ideal.c == 0 or bool(isprime(ideal.c))


def z_is_primary_ideal(ideal: ZIdeal) -> bool:
    return ideal.c == 0 or (ideal.c > 1 and len(factorint(ideal.c)) == 1)


def z_is_maximal_ideal(ideal: ZIdeal) -> bool:
    return bool(isprime(ideal.c))


def z_radical(ideal: ZIdeal) -> ZIdeal:
    if ideal.c <= 1:
        return ideal
    return ZIdeal(math.prod(primefactors(ideal.c)))


def z_witness_not_semiprime(
    sub: ZSubmodule, module: ZModuleInstance | None, r: int, m: Sequence[int], n: int
) -> bool:
    """True iff (r, m, n) certifies that N is not semiprime: r^n m in N, rm not in N."""
    module = _owned(sub, module)
    if not module.is_homogeneous(m):
        raise InvalidArgument(f"{tuple(m)} is not homogeneous in {module.name}")
    if n < 1:
        raise InvalidArgument(f"exponent must be >= 1, got {n}")
    rn = r**n
    return tuple(rn * x for x in m) in sub and tuple(r * x for x in m) not in sub


def z_semiprime_submodule_torsion(
    sub: ZSubmodule, module: ZModuleInstance | None = None
) -> tuple[bool, ZWitness | None]:
    """
    Exact decision for torsion modules. With E the lcm of the torsion orders,
    r^n m and rm depend only on r mod E, and the residues r^n mod E all occur
    for some n <= E, so the search r < E, n <= E is exhaustive.
    """
    module = _owned(sub, module)
    if module.free_rank:
        raise Unsupported(
            "semiprime decision needs a torsion module; supply a witness instead",
            witness=module.free_rank,
        )
    if z_colon_ideal(sub, module).c == 1:
        return False, None
    big_e = math.lcm(*module.torsion_orders)
    vectors = list(module.homogeneous_vectors(0))
    vectors.sort()
    for r in range(big_e):
        for m in vectors:
            if tuple(r * x for x in m) in sub:
                continue
            for n in range(2, big_e + 1):
                k = pow(r, n, big_e)
                if tuple(k * x for x in m) in sub:
                    return False, ZWitness(r, m, n)
    return True, None


def z_is_quasi_semiprime(sub: ZSubmodule, module: ZModuleInstance | None = None) -> bool:
    colon = z_colon_ideal(sub, module)
    return colon.is_proper and z_is_semiprime_ideal(colon)


def z_search_witness(
    sub: ZSubmodule, module: ZModuleInstance | None = None, bound: int = 8
) -> ZWitness | None:
    """Bounded refutation search: r in [0, bound], small homogeneous m, 2 <= n <= bound."""
    module = _owned(sub, module)
    vectors = list(module.homogeneous_vectors(bound))
    for r in range(bound + 1):
        for m in vectors:
            if tuple(r * x for x in m) in sub:
                continue
            for n in range(2, bound + 1):
                if z_witness_not_semiprime(sub, module, r, m, n):
                    return ZWitness(r, m, n)
    return None


def finite_counterpart(
    sub: ZSubmodule, module: ZModuleInstance | None, n: int
) -> tuple[GradedModule, GradedSubmodule]:
    """The same torsion module and submodule over Z_n, where Z acts through Z -> Z_n."""
    module = _owned(sub, module)
    if module.free_rank:
        raise Unsupported("only torsion modules have a finite counterpart")
    for order in module.torsion_orders:
        if n % order:
            raise InvalidArgument(f"torsion order {order} does not divide {n}")
    ring = make_cyclic_ring(n, module.group)
    finite = product_module(list(zip(module.torsion_orders, module.degrees)), ring)
    closure = submodule_closure(finite, (finite.element(v) for v in sub.generators))
    return finite, closure
