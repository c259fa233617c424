"""Finite grading groups given by a Cayley table. Element 0 is the identity."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from grading_core.errors import AxiomViolation, InvalidArgument
from grading_core.tables import Table, check_square, freeze_table


@dataclass(frozen=True)
class GradingGroup:
    table: Table
    names: tuple[str, ...] = ()

    identity = 0

    def __post_init__(self) -> None:
        n = len(self.table)
        if n < 1:
            raise InvalidArgument("grading group must have at least one element")
        check_square(self.table, n, "group")
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                raise AxiomViolation("element 0 is not a two-sided identity", witness=(a,))
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise AxiomViolation("group operation is not associative", witness=(a, b, c))
        for a in range(n):
            if 0 not in self.table[a]:
                raise AxiomViolation("element has no inverse", witness=(a,))
        if self.names and len(self.names) != n:
            raise InvalidArgument("one name per group element is required")

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self.table[a].index(0) for a in range(self.order))

    def name(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def contains(self, a: int) -> bool:
        return isinstance(a, int) and 0 <= a < self.order


def cyclic_group(n: int) -> GradingGroup:
    """Z_n written additively: element k is the residue k."""
    if n < 1:
        raise InvalidArgument(f"cyclic group order must be positive, got {n}")
    return GradingGroup(
        table=freeze_table([(a + b) % n for b in range(n)] for a in range(n)),
        names=tuple(str(k) for k in range(n)),
    )
