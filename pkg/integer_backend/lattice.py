"""
Subgroups of Z^k through their Hermite normal form.

Generators are the columns of an integer matrix; sympy reduces it to a
column-style HNF whose columns are a basis of the same subgroup. Each basis
column is zero below its pivot row and positive at it, and pivot rows
increase with the column index.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form

from grading_core.errors import InvalidArgument


class IntegerLattice:
    def __init__(self, dimension: int, vectors: Iterable[Sequence[int]] = ()) -> None:
        if dimension < 1:
            raise InvalidArgument(f"lattice dimension must be >= 1, got {dimension}")
        self.dimension = dimension
        self.generators: tuple[tuple[int, ...], ...] = tuple(self._checked(v) for v in vectors)

    def _checked(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.dimension:
            raise InvalidArgument(
                f"vector has {len(v)} coordinates, lattice has {self.dimension}"
            )
        return tuple(int(x) for x in v)

    @cached_property
    def basis(self) -> dict[int, tuple[int, ...]]:
        """pivot row -> HNF basis column."""
        nonzero = [v for v in self.generators if any(v)]
        if not nonzero:
            return {}
        columns = Matrix([[v[i] for v in nonzero] for i in range(self.dimension)])
        hnf = hermite_normal_form(columns)
        out: dict[int, tuple[int, ...]] = {}
        for j in range(hnf.cols):
            col = tuple(int(hnf[i, j]) for i in range(self.dimension))
            if not any(col):
                continue
            pivot = max(i for i, x in enumerate(col) if x)
            out[pivot] = col
        return out

    def __contains__(self, v: Sequence[int]) -> bool:
        v = list(self._checked(v))
        basis = self.basis
        for i in reversed(range(self.dimension)):
            if v[i] == 0:
                continue
            col = basis.get(i)
            if col is None or v[i] % col[i]:
                return False
            q = v[i] // col[i]
            v = [y - q * x for x, y in zip(col, v)]
        return True

    def axis_generator(self, j: int) -> int:
        """The nonnegative c with L meeting the j-th axis in cZ (0 when it meets only in 0)."""
        if not 0 <= j < self.dimension:
            raise InvalidArgument(f"axis {j} out of range")
        # axis j first: the only basis column supported on it alone is the one pivoting at row 0
        order = [j] + [i for i in range(self.dimension) if i != j]
        permuted = IntegerLattice(self.dimension, [[v[i] for i in order] for v in self.generators])
        first = permuted.basis.get(0)
        return 0 if first is None else abs(first[0])
