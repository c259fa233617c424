"""Law checks for element-wise maps between graded modules."""

from __future__ import annotations

from typing import NamedTuple, Sequence

from module_core.module import GradedModule


class MapViolation(NamedTuple):
    law: str  # "shape", "additive", "linear" or "graded"
    witness: tuple


def map_violation(
    source: GradedModule, target: GradedModule, table: Sequence[int]
) -> MapViolation | None:
    """First broken law of a candidate graded homomorphism, or None."""
    if len(table) != source.order:
        return MapViolation("shape", (len(table), source.order))
    for x, y in enumerate(table):
        if not 0 <= y < target.order:
            return MapViolation("shape", (x, y))
    s_add, t_add = source.add, target.add
    for x in range(source.order):
        fx = table[x]
        for y in range(x, source.order):
            if table[s_add[x][y]] != t_add[fx][table[y]]:
                return MapViolation("additive", (x, y))
    s_act, t_act = source.action, target.action
    for r in range(source.ring.order):
        for x in range(source.order):
            if table[s_act[r][x]] != t_act[r][table[x]]:
                return MapViolation("linear", (r, x))
    for g, comp in enumerate(source.components):
        image_comp = target.components[g]
        for x in sorted(comp):
            if table[x] not in image_comp:
                return MapViolation("graded", (x, g))
    return None
