"""
Search for submodules that are quasi-semiprime but not semiprime.

The finite portion scans every proper graded N of every catalog module. The
Z portion checks the catalog's Z examples with the integer backend. Every
hit is re-verified by both predicates (and by the naive oracle when the
instance is small enough) before it is reported.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import config
from grading_core.errors import InvariantBreach, Unsupported
from integer_backend.zmodule import (
    ZWitness,
    z_colon_ideal,
    z_is_quasi_semiprime,
    z_search_witness,
    z_semiprime_submodule_torsion,
    z_witness_not_semiprime,
)
from module_core.module import GradedModule
from module_core.submodules import GradedSubmodule, enumerate_graded_submodules
from submodule_predicates.predicates import (
    is_graded_quasi_semiprime_submodule,
    is_graded_semiprime_submodule,
    quasi_semiprime_check,
    semiprime_submodule_witness,
)
from theorem_harness.catalog import Catalog, ZExample
from theorem_harness.oracle import naive_oracle

logger = logging.getLogger("graded.search")


@dataclass(frozen=True)
class SearchHit:
    ring: str
    module: str
    submodule: str


@dataclass(frozen=True)
class ZHit:
    name: str
    colon: int
    witness: ZWitness


@dataclass(frozen=True)
class SearchReport:
    space_description: str
    found: tuple[SearchHit, ...]
    z_hits: tuple[ZHit, ...]
    exhausted: bool


def _reverify(module: GradedModule, sub: GradedSubmodule) -> None:
    if not is_graded_quasi_semiprime_submodule(sub, module) or is_graded_semiprime_submodule(
        sub, module
    ):
        raise InvariantBreach(f"search hit {sub.label} in {module.name} does not re-verify")
    instance = {"module": module, "submodule": sub}
    try:
        agrees = naive_oracle("quasi-semiprime", instance) and not naive_oracle(
            "semiprime", instance
        )
    except Unsupported:
        return
    if not agrees:
        raise InvariantBreach(f"naive oracle rejects search hit {sub.label} in {module.name}")


def _z_hit(example: ZExample) -> ZHit | None:
    module, sub = example.module, example.submodule
    if not z_is_quasi_semiprime(sub, module):
        return None
    witness = example.witness
    if witness is not None and not z_witness_not_semiprime(sub, module, *witness):
        logger.warning("supplied witness %s does not certify %s", witness, example.name)
        witness = None
    if witness is None and module.free_rank == 0:
        witness = z_semiprime_submodule_torsion(sub, module)[1]
    if witness is None:
        witness = z_search_witness(sub, module, config.Z_SEARCH_BOUND)
    if witness is None:
        return None
    return ZHit(example.name, z_colon_ideal(sub, module).c, witness)


def search_quasi_not_semiprime(catalog: Catalog) -> SearchReport:
    found: list[SearchHit] = []
    scanned = 0
    for module in catalog.modules:
        for sub in enumerate_graded_submodules(module):
            if not sub.is_proper:
                continue
            scanned += 1
            if not quasi_semiprime_check(sub, module)[0]:
                continue
            if semiprime_submodule_witness(sub, module) is None:
                continue
            _reverify(module, sub)
            found.append(SearchHit(module.ring.name, module.name, sub.label))
    z_hits = tuple(hit for hit in map(_z_hit, catalog.z_examples) if hit is not None)
    logger.info(
        "search over %s: %d proper submodules, %d finite hits, %d Z hits",
        catalog.profile,
        scanned,
        len(found),
        len(z_hits),
    )
    return SearchReport(
        space_description=(
            f"catalog {catalog.profile}: {len(catalog.modules)} modules, "
            f"{scanned} proper graded submodules, {len(catalog.z_examples)} Z examples"
        ),
        found=tuple(found),
        z_hits=z_hits,
        exhausted=True,
    )
