"""
Table-level helpers shared by rings, modules and their substructures.

Everything here works on plain operation tables (tuple-of-tuple, indexed by
element number) so the same closure and lattice code serves ideals of a ring
and submodules of a module: an ideal is a submodule of R acting on itself.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Sequence

from grading_core.errors import AxiomViolation, GradingInconsistent

Table = tuple[tuple[int, ...], ...]


def freeze_table(rows: Iterable[Iterable[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in rows)


def check_square(table: Table, size: int, name: str) -> None:
    if len(table) != size or any(len(row) != size for row in table):
        raise AxiomViolation(f"{name} table must be {size}x{size}")
    for a, row in enumerate(table):
        for b, value in enumerate(row):
            if not 0 <= value < size:
                raise AxiomViolation(f"{name} table entry out of range", witness=(a, b, value))


def check_abelian_group(add: Table, zero: int) -> tuple[int, ...]:
    """Exhaustive abelian group check. Returns the negation table."""
    size = len(add)
    for a in range(size):
        if add[zero][a] != a:
            raise AxiomViolation("zero is not an additive identity", witness=(a,))
        for b in range(size):
            if add[a][b] != add[b][a]:
                raise AxiomViolation("addition is not commutative", witness=(a, b))
    for a, b, c in itertools.product(range(size), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            raise AxiomViolation("addition is not associative", witness=(a, b, c))
    neg = []
    for a in range(size):
        inverse = next((b for b in range(size) if add[a][b] == zero), None)
        if inverse is None:
            raise AxiomViolation("element has no additive inverse", witness=(a,))
        neg.append(inverse)
    return tuple(neg)


def check_subgroup(members: frozenset[int], add: Table, zero: int, name: str) -> None:
    if zero not in members:
        raise GradingInconsistent(f"component {name} does not contain zero")
    for a in members:
        for b in members:
            if add[a][b] not in members:
                raise GradingInconsistent(
                    f"component {name} is not closed under addition", witness=(a, b)
                )


def decompose(
    size: int, add: Table, zero: int, components: Sequence[frozenset[int]]
) -> tuple[tuple[int, ...], ...]:
    """
    Per-element homogeneous components, one entry per group element.

    Raises GradingInconsistent unless the components form an internal
    direct sum covering every element exactly once.
    """
    combos = 1
    for comp in components:
        combos *= len(comp)
    if combos != size:
        raise GradingInconsistent(
            f"components multiply to {combos} elements, structure has {size}"
        )
    found: dict[int, tuple[int, ...]] = {}
    for combo in itertools.product(*(sorted(c) for c in components)):
        total = zero
        for part in combo:
            total = add[total][part]
        if total in found:
            raise GradingInconsistent(
                "components do not form a direct sum", witness=(total, found[total], combo)
            )
        found[total] = combo
    return tuple(found[x] for x in range(size))


def span(
    add: Table,
    action: Table,
    zero: int,
    gens: Iterable[int],
    base: Iterable[int] = (),
) -> frozenset[int]:
    """
    Smallest additive subgroup containing `base` and every r*g.

    `base` must already be closed (a submodule) when given; the result is then
    base + sum of R*g, which is again closed under the action.
    """
    members = set(base) or {zero}
    multiples = sorted({action[r][g] for g in gens for r in range(len(action))})
    for s in multiples:
        if s in members:
            continue
        grown = set(members)
        frontier = list(members)
        while frontier:
            y = add[frontier.pop()][s]
            if y not in grown:
                grown.add(y)
                frontier.append(y)
        members = grown
    return frozenset(members)


def first_ungraded(
    members: frozenset[int], decomposition: Sequence[tuple[int, ...]]
) -> tuple[int, int] | None:
    """(element, missing component) for the smallest offending member, or None."""
    for x in sorted(members):
        for part in decomposition[x]:
            if part not in members:
                return x, part
    return None


def canonical_key(members: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return len(members), tuple(sorted(members))


def graded_lattice(
    add: Table, action: Table, zero: int, homogeneous: Sequence[int]
) -> list[frozenset[int]]:
    """
    Every submodule generated by homogeneous elements, in canonical order.

    Graded submodules are exactly the ones generated by their homogeneous
    members, so joining one homogeneous element at a time from {0} reaches
    all of them.
    """
    bottom = frozenset({zero})
    seen = {bottom}
    queue = deque([bottom])
    while queue:
        current = queue.popleft()
        for h in homogeneous:
            if h in current:
                continue
            joined = span(add, action, zero, (h,), base=current)
            if joined not in seen:
                seen.add(joined)
                queue.append(joined)
    return sorted(seen, key=canonical_key)


def format_labels(members: Iterable[int], labels: Sequence[str]) -> str:
    return "{" + ", ".join(labels[x] for x in sorted(members)) + "}"
