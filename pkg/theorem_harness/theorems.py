"""
Per-theorem sweeps over a catalog.

Each checker yields one Outcome per candidate instance: whether the instance
has the theorem's shape (multiplication module, epimorphism, N in K, ...),
whether the hypothesis holds, and whether the conclusion holds. Equivalences
count every in-shape instance as non-vacuous and compare both sides.

Hypotheses and conclusions are evaluated through different predicates (for
example semiprime via the submodule witness search, quasi-semiprime via the
colon ideal) so a bug in one cannot make its own check pass.
"""

from __future__ import annotations

import asyncio
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, NamedTuple

import config
from graded_hom.hom import (
    GradedHomomorphism,
    graded_homomorphisms,
    image,
    is_epimorphism,
    kernel,
    preimage,
    quotient_projection,
)
from grading_core.errors import InvalidArgument
from grading_core.ideals import (
    is_graded_maximal_ideal,
    is_graded_prime_ideal,
    is_graded_primary_ideal,
)
from module_core.module import GradedModule
from module_core.submodules import (
    GradedSubmodule,
    colon_ideal,
    enumerate_graded_submodules,
    intersection,
)
from submodule_predicates.envelope import graded_envelope
from submodule_predicates.predicates import (
    ideal_power_criterion,
    is_graded_multiplication_module,
    is_graded_quasi_semiprime_module,
    is_graded_semiprime_module,
    quasi_semiprime_check,
    semiprime_submodule_witness,
)
from theorem_harness.catalog import Catalog

logger = logging.getLogger("graded.harness")

THEOREM_IDS = ("T2.2", "T2.5", "T2.6", "T2.7", "T2.8", "T2.9i", "T2.9ii", "T2.10", "T2.11", "T2.13")

STATUS_PASS = "PASS"
STATUS_WEAK = "WEAK-PASS"
STATUS_FAIL = "FAIL"


class Outcome(NamedTuple):
    in_shape: bool
    hypothesis: bool
    conclusion: bool
    details: dict[str, Any]


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    total: int
    skipped: int
    instances_checked: int
    vacuous: int
    violations: tuple[dict[str, Any], ...] = ()
    elapsed: float = field(default=0.0, compare=False)

    @property
    def status(self) -> str:
        if self.violations:
            return STATUS_FAIL
        if self.instances_checked == self.vacuous:
            return STATUS_WEAK
        return STATUS_PASS

    @property
    def passed(self) -> bool:
        return not self.violations


def _qsp(sub: GradedSubmodule, module: GradedModule) -> bool:
    return quasi_semiprime_check(sub, module)[0]


def _proper(module: GradedModule) -> list[GradedSubmodule]:
    return [s for s in enumerate_graded_submodules(module) if s.is_proper]


def _where(module: GradedModule, **subs: GradedSubmodule) -> dict[str, Any]:
    out: dict[str, Any] = {"ring": module.ring.name, "module": module.name}
    out.update({k: v.label for k, v in subs.items()})
    return out


def _semiprime_implies_quasi(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        for sub in enumerate_graded_submodules(module):
            if not sub.is_proper:
                yield Outcome(False, False, False, {})
                continue
            semiprime = semiprime_submodule_witness(sub, module) is None
            yield Outcome(True, semiprime, _qsp(sub, module), _where(module, N=sub))


def _on_multiplication_modules(
    catalog: Catalog, left: Callable, right: Callable, names: tuple[str, str]
) -> Iterator[Outcome]:
    """Equivalence sweeps: left(N, M) == right(N, M) on multiplication modules."""
    for module in catalog.modules:
        in_shape = is_graded_multiplication_module(module)
        for sub in enumerate_graded_submodules(module):
            if not (in_shape and sub.is_proper):
                yield Outcome(False, False, False, {})
                continue
            a, b = left(sub, module), right(sub, module)
            details = _where(module, N=sub)
            details.update({names[0]: a, names[1]: b})
            yield Outcome(True, True, a == b, details)


def _quasi_vs_semiprime(catalog: Catalog) -> Iterator[Outcome]:
    return _on_multiplication_modules(
        catalog,
        _qsp,
        lambda n, m: semiprime_submodule_witness(n, m) is None,
        ("quasi_semiprime", "semiprime"),
    )


def _quasi_vs_ideal_powers(catalog: Catalog) -> Iterator[Outcome]:
    return _on_multiplication_modules(
        catalog,
        _qsp,
        lambda n, m: ideal_power_criterion(n, m)[0],
        ("quasi_semiprime", "ideal_power"),
    )


def _quasi_vs_envelope(catalog: Catalog) -> Iterator[Outcome]:
    return _on_multiplication_modules(
        catalog,
        _qsp,
        lambda n, m: graded_envelope(n, m).submodule.elements == n.elements,
        ("quasi_semiprime", "equals_envelope"),
    )


def _primary_colon_is_prime(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        for sub in enumerate_graded_submodules(module):
            if not sub.is_proper:
                yield Outcome(False, False, False, {})
                continue
            colon = colon_ideal(sub, module)
            hyp = _qsp(sub, module) and is_graded_primary_ideal(colon)
            details = _where(module, N=sub)
            details["colon"] = colon.label
            yield Outcome(True, hyp, is_graded_prime_ideal(colon), details)


def hom_family(module: GradedModule) -> list[GradedHomomorphism]:
    """Projections M -> M/K for every proper graded K, then graded automorphisms of small M."""
    family = [quotient_projection(module, k)[1] for k in _proper(module)]
    if module.order <= config.ENDOMORPHISM_MAX_ORDER:
        family += [f for f in graded_homomorphisms(module) if is_epimorphism(f)]
    return family


def _hom_details(f: GradedHomomorphism, **subs: GradedSubmodule) -> dict[str, Any]:
    out: dict[str, Any] = {
        "ring": f.source.ring.name,
        "module": f.source.name,
        "target": f.target.name,
        "hom": f.name,
    }
    out.update({k: v.label for k, v in subs.items()})
    return out


def _image_transfer(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        for f in hom_family(module):
            ker = kernel(f)
            for sub in _proper(module):
                hyp = ker.issubset(sub) and _qsp(sub, module)
                pushed = image(f, sub)
                conc = pushed.is_proper and _qsp(pushed, f.target)
                yield Outcome(True, hyp, conc, _hom_details(f, N=sub, image=pushed))


def _preimage_transfer(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        for f in hom_family(module):
            for sub in _proper(f.target):
                pulled = preimage(f, sub)
                conc = pulled.is_proper and _qsp(pulled, module)
                yield Outcome(
                    True, _qsp(sub, f.target), conc, _hom_details(f, N=sub, preimage=pulled)
                )


def _maximal_colon_lifts(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        proper = _proper(module)
        for small in proper:
            hyp_small = _qsp(small, module) and is_graded_maximal_ideal(colon_ideal(small, module))
            for big in proper:
                if not small.issubset(big):
                    yield Outcome(False, False, False, {})
                    continue
                yield Outcome(True, hyp_small, _qsp(big, module), _where(module, N=small, K=big))


def _intersection_closed(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        proper = _proper(module)
        for i, a in enumerate(proper):
            for b in proper[i:]:
                hyp = _qsp(a, module) and _qsp(b, module)
                meet = intersection(a, b)
                yield Outcome(
                    True, hyp, _qsp(meet, module), _where(module, N=a, K=b, intersection=meet)
                )


def _semiprime_module_is_quasi(catalog: Catalog) -> Iterator[Outcome]:
    for module in catalog.modules:
        if module.is_zero:
            yield Outcome(False, False, False, {})
            continue
        yield Outcome(
            True,
            is_graded_semiprime_module(module),
            is_graded_quasi_semiprime_module(module),
            _where(module),
        )


CHECKERS: dict[str, Callable[[Catalog], Iterator[Outcome]]] = {
    "T2.2": _semiprime_implies_quasi,
    "T2.5": _quasi_vs_semiprime,
    "T2.6": _quasi_vs_ideal_powers,
    "T2.7": _primary_colon_is_prime,
    "T2.8": _quasi_vs_envelope,
    "T2.9i": _image_transfer,
    "T2.9ii": _preimage_transfer,
    "T2.10": _maximal_colon_lifts,
    "T2.11": _intersection_closed,
    "T2.13": _semiprime_module_is_quasi,
}


def verify_theorem(theorem_id: str, catalog: Catalog) -> TheoremReport:
    checker = CHECKERS.get(theorem_id)
    if checker is None:
        raise InvalidArgument(
            f"unknown theorem id {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}"
        )
    logger.info("verifying %s on catalog %s", theorem_id, catalog.profile)
    started = time.perf_counter()
    total = skipped = vacuous = 0
    violations: list[dict[str, Any]] = []
    for outcome in checker(catalog):
        total += 1
        if not outcome.in_shape:
            skipped += 1
        elif not outcome.hypothesis:
            vacuous += 1
        elif not outcome.conclusion:
            violations.append(outcome.details)
    report = TheoremReport(
        theorem_id=theorem_id,
        total=total,
        skipped=skipped,
        instances_checked=total - skipped,
        vacuous=vacuous,
        violations=tuple(violations),
        elapsed=time.perf_counter() - started,
    )
    logger.info(
        "%s %s: %d checked, %d vacuous, %d skipped, %d violations in %.2fs",
        theorem_id,
        report.status,
        report.instances_checked,
        report.vacuous,
        report.skipped,
        len(report.violations),
        report.elapsed,
    )
    if violations:
        logger.warning("%s has %d violations; first: %s", theorem_id, len(violations), violations[0])
    return report


async def verify_all(catalog: Catalog, workers: int | None = None) -> list[TheoremReport]:
    """All theorems on worker threads; reports come back in THEOREM_IDS order."""
    sem = asyncio.Semaphore(workers or config.HARNESS_WORKERS)

    async def _one(theorem_id: str) -> TheoremReport:
        async with sem:
            return await asyncio.to_thread(verify_theorem, theorem_id, catalog)

    return list(await asyncio.gather(*[_one(t) for t in THEOREM_IDS]))


def run_all(catalog: Catalog, workers: int | None = None) -> list[TheoremReport]:
    return asyncio.run(verify_all(catalog, workers))
