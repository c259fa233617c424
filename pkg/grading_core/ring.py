"""
Finite G-graded commutative rings given by explicit operation tables.

Every ring is checked exhaustively when it is built: commutative ring with 1,
components forming an internal direct sum, R_a R_b inside R_ab, and 1 in R_e.
Quantifiers in the predicates range over `homogeneous_values` (h(R)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from grading_core.errors import AxiomViolation, GradingInconsistent, InvalidArgument
from grading_core.group import GradingGroup
from grading_core.tables import (
    Table,
    check_abelian_group,
    check_square,
    check_subgroup,
    decompose,
    freeze_table,
)


class HomogeneousElement(NamedTuple):
    value: int
    degree: int


@dataclass(frozen=True, eq=False)
class FiniteGradedRing:
    name: str
    add: Table
    mul: Table
    zero: int
    one: int
    group: GradingGroup
    components: tuple[frozenset[int], ...]
    labels: tuple[str, ...]
    coords: tuple[tuple[int, ...], ...]
    # Set for Z_n so cyclic modules can reduce ring elements to residues.
    modulus: int | None = field(default=None)

    def __post_init__(self) -> None:
        n = self.order
        check_square(self.add, n, "add")
        check_square(self.mul, n, "mul")
        if len(self.labels) != n or len(self.coords) != n:
            raise InvalidArgument("one label and one coordinate per element is required")
        check_abelian_group(self.add, self.zero)
        add, mul = self.add, self.mul
        for a in range(n):
            if mul[self.one][a] != a:
                raise AxiomViolation("one is not a multiplicative identity", witness=(a,))
            for b in range(n):
                if mul[a][b] != mul[b][a]:
                    raise AxiomViolation("multiplication is not commutative", witness=(a, b))
        for a, b, c in itertools.product(range(n), repeat=3):
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                raise AxiomViolation("multiplication is not associative", witness=(a, b, c))
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                raise AxiomViolation("multiplication does not distribute", witness=(a, b, c))
        if len(self.components) != self.group.order:
            raise GradingInconsistent("one component per group element is required")
        for g, comp in enumerate(self.components):
            check_subgroup(comp, add, self.zero, f"R_{self.group.name(g)}")
        # Forces the direct-sum check now rather than on first use.
        _ = self.decomposition
        for alpha, beta in itertools.product(range(self.group.order), repeat=2):
            target = self.components[self.group.op(alpha, beta)]
            for a in self.components[alpha]:
                for b in self.components[beta]:
                    if mul[a][b] not in target:
                        raise GradingInconsistent(
                            "R_a R_b is not contained in R_ab", witness=(a, b, alpha, beta)
                        )
        if self.one not in self.components[self.group.identity]:
            raise GradingInconsistent("1 must lie in R_e", witness=(self.one,))

    @property
    def order(self) -> int:
        return len(self.add)

    @cached_property
    def decomposition(self) -> tuple[tuple[int, ...], ...]:
        return decompose(self.order, self.add, self.zero, self.components)

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(self.add[a].index(self.zero) for a in range(self.order))

    @cached_property
    def degrees(self) -> tuple[int | None, ...]:
        out: list[int | None] = []
        for x in range(self.order):
            if x == self.zero:
                out.append(self.group.identity)
                continue
            out.append(next((g for g, c in enumerate(self.components) if x in c), None))
        return tuple(out)

    @cached_property
    def homogeneous(self) -> tuple[HomogeneousElement, ...]:
        return tuple(
            HomogeneousElement(x, g) for x, g in enumerate(self.degrees) if g is not None
        )

    @cached_property
    def homogeneous_values(self) -> tuple[int, ...]:
        return tuple(h.value for h in self.homogeneous)

    def is_homogeneous(self, x: int) -> bool:
        return self.degrees[x] is not None

    @cached_property
    def powers(self) -> Table:
        """powers[r][k] = r^k for k in 0..2|R| (r^0 = 1)."""
        rows = []
        for r in range(self.order):
            row = [self.one]
            for _ in range(2 * self.order):
                row.append(self.mul[row[-1]][r])
            rows.append(tuple(row))
        return tuple(rows)

    def power(self, r: int, k: int) -> int:
        row = self.powers[r]
        if k < len(row):
            return row[k]
        value = row[-1]
        for _ in range(k - len(row) + 1):
            value = self.mul[value][r]
        return value

    def element(self, coords: tuple[int, ...] | list[int]) -> int:
        key = tuple(int(c) for c in coords)
        index = self._coord_index.get(key)
        if index is None:
            raise InvalidArgument(f"no element of {self.name} has coordinates {list(key)}")
        return index

    @cached_property
    def _coord_index(self) -> dict[tuple[int, ...], int]:
        return {c: i for i, c in enumerate(self.coords)}


def same_ring(a: FiniteGradedRing, b: FiniteGradedRing) -> bool:
    return a is b or (
        a.add == b.add
        and a.mul == b.mul
        and a.components == b.components
        and a.group == b.group
    )


def make_cyclic_ring(n: int, group: GradingGroup) -> FiniteGradedRing:
    """Z_n with the trivial grading: R_e = Z_n, R_g = {0} for g != e."""
    if n < 2:
        raise InvalidArgument(f"cyclic ring needs n >= 2, got {n}")
    everything = frozenset(range(n))
    return FiniteGradedRing(
        name=f"Z{n}",
        add=freeze_table([(a + b) % n for b in range(n)] for a in range(n)),
        mul=freeze_table([(a * b) % n for b in range(n)] for a in range(n)),
        zero=0,
        one=1,
        group=group,
        components=tuple(
            everything if g == group.identity else frozenset({0}) for g in range(group.order)
        ),
        labels=tuple(str(a) for a in range(n)),
        coords=tuple((a,) for a in range(n)),
        modulus=n,
    )


def _poly_label(a: int, b: int) -> str:
    if b == 0:
        return str(a)
    x_part = "x" if b == 1 else f"{b}x"
    return x_part if a == 0 else f"{a}+{x_part}"


def make_quotient_poly_ring(n: int, c: int, xdeg: int, group: GradingGroup) -> FiniteGradedRing:
    """
    Z_n[x]/(x^2 - c) with x homogeneous of degree `xdeg`.

    Element a + b*x has index a + n*b. Requires xdeg^2 = e so that x*x = c
    can sit in R_e.
    """
    if n < 2:
        raise InvalidArgument(f"quotient ring needs n >= 2, got {n}")
    if not group.contains(xdeg):
        raise InvalidArgument(f"degree {xdeg} is not an element of the grading group")
    if group.op(xdeg, xdeg) != group.identity:
        raise GradingInconsistent("x*x lies in R_e, so deg(x)^2 must be e", witness=(xdeg,))
    c %= n
    pairs = [(a, b) for b in range(n) for a in range(n)]
    index = {p: i for i, p in enumerate(pairs)}

    def plus(p: tuple[int, int], q: tuple[int, int]) -> int:
        return index[((p[0] + q[0]) % n, (p[1] + q[1]) % n)]

    def times(p: tuple[int, int], q: tuple[int, int]) -> int:
        a, b = p
        a2, b2 = q
        return index[((a * a2 + b * b2 * c) % n, (a * b2 + a2 * b) % n)]

    constants = frozenset(index[(a, 0)] for a in range(n))
    linear = frozenset(index[(0, b)] for b in range(n))
    if xdeg == group.identity:
        components = tuple(
            frozenset(range(n * n)) if g == group.identity else frozenset({0})
            for g in range(group.order)
        )
    else:
        components = tuple(
            constants if g == group.identity else linear if g == xdeg else frozenset({0})
            for g in range(group.order)
        )
    poly = "x^2" if c == 0 else f"x^2-{c}"
    suffix = "" if xdeg != group.identity else " trivial"
    return FiniteGradedRing(
        name=f"Z{n}[x]/({poly}){suffix}",
        add=freeze_table([plus(p, q) for q in pairs] for p in pairs),
        mul=freeze_table([times(p, q) for q in pairs] for p in pairs),
        zero=index[(0, 0)],
        one=index[(1 % n, 0)],
        group=group,
        components=components,
        labels=tuple(_poly_label(a, b) for a, b in pairs),
        coords=tuple(pairs),
    )


def homogeneous_elements(ring: FiniteGradedRing) -> tuple[HomogeneousElement, ...]:
    """h(R), each value once; zero is listed with degree e."""
    return ring.homogeneous
