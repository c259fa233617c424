"""
Finite graded modules over finite graded rings.

A module is an addition table, an action table action[r][m] = r*m, and one
component per group element. Constructors check the unital module axioms and
the grading law R_a M_b in M_ab exhaustively. Modules derived from an already
checked module (quotients, submodules) are built with `trusted=True`; their
correctness is established by the map checks in module_core.maps instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from grading_core.errors import AxiomViolation, GradingInconsistent, InvalidArgument
from grading_core.ring import FiniteGradedRing, same_ring
from grading_core.tables import (
    Table,
    check_abelian_group,
    check_square,
    check_subgroup,
    decompose,
    freeze_table,
)


@dataclass(frozen=True, eq=False)
class GradedModule:
    name: str
    ring: FiniteGradedRing
    add: Table
    action: Table
    zero: int
    components: tuple[frozenset[int], ...]
    labels: tuple[str, ...]
    coords: tuple[tuple[int, ...], ...]
    trusted: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if not self.trusted:
            verify_module(self)

    @property
    def order(self) -> int:
        return len(self.add)

    @property
    def is_zero(self) -> bool:
        return self.order == 1

    @cached_property
    def decomposition(self) -> tuple[tuple[int, ...], ...]:
        return decompose(self.order, self.add, self.zero, self.components)

    @cached_property
    def degrees(self) -> tuple[int | None, ...]:
        out: list[int | None] = []
        for x in range(self.order):
            if x == self.zero:
                out.append(self.ring.group.identity)
                continue
            out.append(next((g for g, c in enumerate(self.components) if x in c), None))
        return tuple(out)

    @cached_property
    def homogeneous_values(self) -> tuple[int, ...]:
        return tuple(x for x, g in enumerate(self.degrees) if g is not None)

    def is_homogeneous(self, x: int) -> bool:
        return self.degrees[x] is not None

    def element(self, coords: tuple[int, ...] | list[int]) -> int:
        key = tuple(int(c) for c in coords)
        index = self._coord_index.get(key)
        if index is None:
            raise InvalidArgument(f"no element of {self.name} has coordinates {list(key)}")
        return index

    @cached_property
    def _coord_index(self) -> dict[tuple[int, ...], int]:
        return {c: i for i, c in enumerate(self.coords)}


def verify_module(module: GradedModule) -> None:
    ring = module.ring
    n = module.order
    check_square(module.add, n, "module add")
    if len(module.action) != ring.order or any(len(row) != n for row in module.action):
        raise AxiomViolation(f"action table must be {ring.order}x{n}")
    if any(not 0 <= v < n for row in module.action for v in row):
        raise AxiomViolation("action table entry out of range")
    if len(module.labels) != n or len(module.coords) != n:
        raise InvalidArgument("one label and one coordinate per element is required")
    check_abelian_group(module.add, module.zero)
    add, act = module.add, module.action
    for m in range(n):
        if act[ring.one][m] != m:
            raise AxiomViolation("1*m != m", witness=(m,))
    for r, s in itertools.product(range(ring.order), repeat=2):
        for m in range(n):
            if act[ring.add[r][s]][m] != add[act[r][m]][act[s][m]]:
                raise AxiomViolation("(r+s)m != rm + sm", witness=(r, s, m))
            if act[ring.mul[r][s]][m] != act[r][act[s][m]]:
                raise AxiomViolation("(rs)m != r(sm)", witness=(r, s, m))
    for r in range(ring.order):
        for m, k in itertools.product(range(n), repeat=2):
            if act[r][add[m][k]] != add[act[r][m]][act[r][k]]:
                raise AxiomViolation("r(m+k) != rm + rk", witness=(r, m, k))
    group = ring.group
    if len(module.components) != group.order:
        raise GradingInconsistent("one component per group element is required")
    for g, comp in enumerate(module.components):
        check_subgroup(comp, add, module.zero, f"M_{group.name(g)}")
    _ = module.decomposition
    for alpha, beta in itertools.product(range(group.order), repeat=2):
        target = module.components[group.op(alpha, beta)]
        for r in ring.components[alpha]:
            for m in module.components[beta]:
                if act[r][m] not in target:
                    raise GradingInconsistent(
                        "R_a M_b is not contained in M_ab", witness=(r, m, alpha, beta)
                    )


def ring_as_module(ring: FiniteGradedRing, shift: int | None = None) -> GradedModule:
    """R acting on itself; with `shift` s the components are M_g = R_(s*g)."""
    group = ring.group
    shift = group.identity if shift is None else shift
    if not group.contains(shift):
        raise InvalidArgument(f"shift {shift} is not an element of the grading group")
    components = tuple(ring.components[group.op(shift, g)] for g in range(group.order))
    name = ring.name if shift == group.identity else f"{ring.name}({group.name(shift)})"
    return GradedModule(
        name=name,
        ring=ring,
        add=ring.add,
        action=ring.mul,
        zero=ring.zero,
        components=components,
        labels=ring.labels,
        coords=ring.coords,
    )


def _tuple_label(parts: tuple[str, ...]) -> str:
    return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"


def product_module(factors, ring: FiniteGradedRing) -> GradedModule:
    """
    Z_n1 x ... x Z_nk over a cyclic ring, factor i homogeneous of degree g_i.

    The ring acts factor-wise through residues: r*(x_i) = ((r mod n_i) x_i).
    Incompatible (n_i, ring) pairs are rejected by the axiom check with a
    witness rather than by trusting the formula.
    """
    factors = [(int(n), int(g)) for n, g in factors]
    if not factors:
        raise InvalidArgument("product module needs at least one factor")
    if ring.modulus is None:
        raise InvalidArgument(f"product modules need a cyclic base ring, got {ring.name}")
    group = ring.group
    for n, g in factors:
        if n < 2:
            raise InvalidArgument(f"factor order must be >= 2, got {n}")
        if not group.contains(g):
            raise InvalidArgument(f"degree {g} is not an element of the grading group")
    orders = [n for n, _ in factors]
    vectors = list(itertools.product(*(range(n) for n in orders)))
    index = {v: i for i, v in enumerate(vectors)}
    residue = ring.coords

    def plus(u, v) -> int:
        return index[tuple((a + b) % n for a, b, n in zip(u, v, orders))]

    def scale(r: int, v) -> int:
        k = residue[r][0]
        return index[tuple((k * a) % n for a, n in zip(v, orders))]

    components = []
    for g in range(group.order):
        members = frozenset(
            i
            for i, v in enumerate(vectors)
            if all(a == 0 for a, (_, d) in zip(v, factors) if d != g)
        )
        components.append(members)
    shape = "+".join(f"Z{n}({group.name(g)})" for n, g in factors)
    return GradedModule(
        name=f"{shape} over {ring.name}",
        ring=ring,
        add=freeze_table([plus(u, v) for v in vectors] for u in vectors),
        action=freeze_table([scale(r, v) for v in vectors] for r in range(ring.order)),
        zero=0,
        components=tuple(components),
        labels=tuple(_tuple_label(tuple(str(a) for a in v)) for v in vectors),
        coords=tuple(vectors),
    )


def direct_sum(first: GradedModule, second: GradedModule) -> GradedModule:
    if not same_ring(first.ring, second.ring):
        raise InvalidArgument("direct sum needs modules over the same ring")
    ring = first.ring
    pairs = [(a, b) for a in range(first.order) for b in range(second.order)]
    index = {p: i for i, p in enumerate(pairs)}
    components = tuple(
        frozenset(index[(a, b)] for a in first.components[g] for b in second.components[g])
        for g in range(ring.group.order)
    )
    return GradedModule(
        name=f"{first.name} + {second.name}",
        ring=ring,
        add=freeze_table(
            [index[(first.add[a][c], second.add[b][d])] for c, d in pairs] for a, b in pairs
        ),
        action=freeze_table(
            [index[(first.action[r][a], second.action[r][b])] for a, b in pairs]
            for r in range(ring.order)
        ),
        zero=index[(first.zero, second.zero)],
        components=components,
        labels=tuple(f"({first.labels[a]},{second.labels[b]})" for a, b in pairs),
        coords=tuple(first.coords[a] + second.coords[b] for a, b in pairs),
    )
