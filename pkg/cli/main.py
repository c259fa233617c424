"""
Command-line front end.

Usage:
    python -m cli check quasi-semiprime -s documents/ex23.json -N N
    python -m cli check semiprime-ideal -s documents/z8.json -I two
    python -m cli enumerate submodules -s documents/split_z2.json
    python -m cli verify all --catalog default --json reports/verify.json
    python -m cli search --catalog small
    python -m cli catalog list --catalog small

Verdicts and reports go to stdout; logs go to stderr. Exit status is 0 when
the command ran, 1 when --expect or a theorem sweep failed, 2 on bad usage or
a rejected document.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable, NamedTuple

import config
from cli.documents import ParsedStructure, StructureError, parse_structure
from grading_core.errors import AlgebraError, InvalidArgument, Unsupported
from grading_core.ideals import (
    GradedIdeal,
    enumerate_graded_ideals,
    graded_radical,
    is_graded_maximal_ideal,
    primary_ideal_witness,
    prime_ideal_witness,
    semiprime_ideal_witness,
)
from integer_backend.zmodule import (
    ZIdeal,
    ZSubmodule,
    ZWitness,
    z_colon_ideal,
    z_is_maximal_ideal,
    z_is_primary_ideal,
    z_is_prime_ideal,
    z_is_semiprime_ideal,
    z_radical,
    z_search_witness,
    z_semiprime_submodule_torsion,
    z_witness_not_semiprime,
)
from module_core.submodules import colon_ideal, enumerate_graded_submodules, zero_submodule
from submodule_predicates.envelope import graded_envelope
from submodule_predicates.predicates import (
    ideal_power_criterion,
    multiplication_check,
    quasi_semiprime_check,
    quasi_semiprime_module_check,
    semiprime_submodule_check,
)
from theorem_harness.catalog import build_standard_catalog
from theorem_harness.reports import (
    dumps,
    render_search,
    render_theorems,
    search_to_dict,
    theorem_to_dict,
)
from theorem_harness.search import search_quasi_not_semiprime
from theorem_harness.theorems import THEOREM_IDS, run_all, verify_theorem

logger = logging.getLogger("graded.cli")

IDEAL_PREDICATES = ("semiprime-ideal", "prime-ideal", "primary-ideal", "maximal-ideal", "radical")
SUBMODULE_PREDICATES = ("semiprime", "quasi-semiprime", "envelope", "ideal-power")
MODULE_PREDICATES = ("multiplication", "semiprime-module", "quasi-semiprime-module")
PREDICATES = IDEAL_PREDICATES + SUBMODULE_PREDICATES + MODULE_PREDICATES


class Verdict(NamedTuple):
    # None means the bounded procedures could not decide
    value: bool | None
    note: str = ""
    witness: Any = None

    def line(self) -> str:
        word = {True: "true", False: "false", None: "unknown"}[self.value]
        return f"{word}  {self.note}" if self.note else word


class UsageError(ValueError):
    pass


def _z_vector(m: tuple[int, ...]) -> str:
    return str(m[0]) if len(m) == 1 else "(" + ",".join(map(str, m)) + ")"


def _z_witness(w: ZWitness) -> Verdict:
    return Verdict(
        False,
        f"witness: r={w.r} m={_z_vector(w.m)} n={w.n}",
        {"r": w.r, "m": list(w.m), "n": w.n},
    )


def _need(table: dict, name: str | None, flag: str, what: str) -> Any:
    if name is None:
        raise UsageError(f"{flag} NAME is required for this predicate")
    if name not in table:
        raise UsageError(f"no {what} named {name!r} in the document")
    return table[name]


def _finite_ideal(parsed: ParsedStructure, args: argparse.Namespace) -> GradedIdeal:
    if args.ideal is not None:
        return _need(parsed.ideals, args.ideal, "-I", "ideal")
    if args.submodule is not None:
        return colon_ideal(_need(parsed.submodules, args.submodule, "-N", "submodule"))
    raise UsageError("ideal predicates need -I NAME, or -N NAME for the colon ideal")


def _check_finite_ideal(predicate: str, ideal: GradedIdeal) -> Verdict:
    ring = ideal.ring
    lab = ring.labels
    if predicate == "radical":
        rad = graded_radical(ideal)
        return Verdict(rad == ideal, f"Gr(I) = {rad.label}", rad.label)
    if not ideal.is_proper:
        return Verdict(False, "improper")
    if predicate == "maximal-ideal":
        return Verdict(is_graded_maximal_ideal(ideal))
    if predicate == "semiprime-ideal":
        w = semiprime_ideal_witness(ideal)
        if w is None:
            return Verdict(True)
        return Verdict(
            False,
            f"witness: r={lab[w.r]} s={lab[w.s]} n={w.n}",
            {"r": lab[w.r], "s": lab[w.s], "n": w.n},
        )
    pair = prime_ideal_witness(ideal) if predicate == "prime-ideal" else primary_ideal_witness(ideal)
    if pair is None:
        return Verdict(True)
    return Verdict(
        False, f"witness: r={lab[pair.r]} s={lab[pair.s]}", {"r": lab[pair.r], "s": lab[pair.s]}
    )


def _check_finite(predicate: str, parsed: ParsedStructure, args: argparse.Namespace) -> Verdict:
    module = parsed.module
    if predicate in IDEAL_PREDICATES:
        return _check_finite_ideal(predicate, _finite_ideal(parsed, args))
    if predicate == "multiplication":
        ok, sub = multiplication_check(module)
        return Verdict(True) if ok else Verdict(False, f"witness: N={sub.label}", sub.label)
    if predicate == "quasi-semiprime-module":
        ok, sub = quasi_semiprime_module_check(module)
        return Verdict(True) if ok else Verdict(False, f"witness: N={sub.label}", sub.label)
    if predicate == "semiprime-module":
        if module.is_zero:
            raise InvalidArgument("the zero module has no proper submodule (0)")
        sub = zero_submodule(module)
    else:
        sub = _need(parsed.submodules, args.submodule, "-N", "submodule")

    ring_lab, mod_lab = module.ring.labels, module.labels
    if predicate in ("semiprime", "semiprime-module"):
        ok, w = semiprime_submodule_check(sub, module)
        if ok:
            return Verdict(True)
        if w is None:
            return Verdict(False, "improper")
        return Verdict(
            False,
            f"witness: r={ring_lab[w.r]} m={mod_lab[w.m]} n={w.n}",
            {"r": ring_lab[w.r], "m": mod_lab[w.m], "n": w.n},
        )
    if predicate == "quasi-semiprime":
        ok, w = quasi_semiprime_check(sub, module)
        if ok:
            return Verdict(True)
        if w is None:
            return Verdict(False, "improper")
        return Verdict(
            False,
            f"witness: r={ring_lab[w.r]} s={ring_lab[w.s]} n={w.n}",
            {"r": ring_lab[w.r], "s": ring_lab[w.s], "n": w.n},
        )
    if predicate == "envelope":
        env = graded_envelope(sub, module).submodule
        if env.elements == sub.elements:
            return Verdict(True, f"envelope: {env.label}", env.label)
        return Verdict(False, f"envelope: {env.label}", env.label)
    ok, w = ideal_power_criterion(sub, module)
    if ok:
        return Verdict(True)
    return Verdict(
        False, f"witness: I={w.ideal.label} k={w.k}", {"ideal": w.ideal.label, "k": w.k}
    )


def _z_ideal(parsed: ParsedStructure, args: argparse.Namespace) -> ZIdeal:
    if args.ideal is not None:
        return _need(parsed.ideals, args.ideal, "-I", "ideal")
    if args.submodule is not None:
        return z_colon_ideal(_need(parsed.submodules, args.submodule, "-N", "submodule"))
    raise UsageError("ideal predicates need -I NAME, or -N NAME for the colon ideal")


def _z_semiprime(parsed: ParsedStructure, name: str, sub: ZSubmodule) -> Verdict:
    module = parsed.module
    if module.free_rank == 0:
        ok, w = z_semiprime_submodule_torsion(sub, module)
        if ok:
            return Verdict(True)
        return Verdict(False, "improper") if w is None else _z_witness(w)
    if z_colon_ideal(sub, module).c == 1:
        return Verdict(False, "improper")
    for w in parsed.witnesses.get(name, []):
        if z_witness_not_semiprime(sub, module, *w):
            return _z_witness(w)
        logger.warning("supplied witness %s does not certify %s", tuple(w), name)
    found = z_search_witness(sub, module, config.Z_SEARCH_BOUND)
    if found is not None:
        return _z_witness(found)
    return Verdict(None, f"no witness with entries up to {config.Z_SEARCH_BOUND}")


def _check_integer(predicate: str, parsed: ParsedStructure, args: argparse.Namespace) -> Verdict:
    if predicate in IDEAL_PREDICATES:
        ideal = _z_ideal(parsed, args)
        if predicate == "radical":
            rad = z_radical(ideal)
            return Verdict(rad == ideal, f"Gr(I) = {rad.label}", rad.label)
        tests: dict[str, Callable[[ZIdeal], bool]] = {
            "semiprime-ideal": z_is_semiprime_ideal,
            "prime-ideal": z_is_prime_ideal,
            "primary-ideal": z_is_primary_ideal,
            "maximal-ideal": z_is_maximal_ideal,
        }
        return Verdict(tests[predicate](ideal), f"ideal: {ideal.label}", ideal.label)
    if predicate == "semiprime-module":
        module = parsed.module
        return _z_semiprime(parsed, "", ZSubmodule(module, ()))
    if predicate not in ("semiprime", "quasi-semiprime"):
        raise Unsupported(f"{predicate} is only available for finite structures")
    name = args.submodule
    sub = _need(parsed.submodules, name, "-N", "submodule")
    if predicate == "semiprime":
        return _z_semiprime(parsed, name, sub)
    colon = z_colon_ideal(sub)
    if not colon.is_proper:
        return Verdict(False, "improper")
    if z_is_semiprime_ideal(colon):
        return Verdict(True)
    return Verdict(False, f"colon: {colon.label}", colon.label)


def _load(path: str) -> ParsedStructure:
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from e
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        raise StructureError(f"byte {e.start}", "document is not valid UTF-8") from e
    return parse_structure(text)


def _write_json(path: str | None, payload: Any) -> None:
    if not path:
        return
    try:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(dumps(payload), encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror or e}") from e


def cmd_check(args: argparse.Namespace) -> int:
    parsed = _load(args.structure)
    check = _check_integer if parsed.is_integer else _check_finite
    verdict = check(args.predicate, parsed, args)
    print(verdict.line())
    _write_json(args.json, {"verdict": verdict.value, "witness": verdict.witness})
    if args.expect is None:
        return 0
    return 0 if verdict.value is (args.expect == "true") else 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    parsed = _load(args.structure)
    if parsed.is_integer:
        raise Unsupported("enumeration needs a finite structure")
    if args.what == "ideals":
        labels = [i.label for i in enumerate_graded_ideals(parsed.ring)]
    else:
        labels = [s.label for s in enumerate_graded_submodules(parsed.module)]
    for label in labels:
        print(label)
    _write_json(args.json, labels)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    catalog = build_standard_catalog(args.catalog)
    if args.theorem == "all":
        reports = run_all(catalog)
    elif args.theorem in THEOREM_IDS:
        reports = [verify_theorem(args.theorem, catalog)]
    else:
        raise UsageError(
            f"unknown theorem {args.theorem!r}; expected all or one of {', '.join(THEOREM_IDS)}"
        )
    print(render_theorems(reports))
    _write_json(
        args.json,
        {"catalog": catalog.profile, "reports": [theorem_to_dict(r) for r in reports]},
    )
    return 0 if all(r.passed for r in reports) else 1


def cmd_search(args: argparse.Namespace) -> int:
    report = search_quasi_not_semiprime(build_standard_catalog(args.catalog))
    print(render_search(report))
    _write_json(args.json, search_to_dict(report))
    return 0


def cmd_catalog(args: argparse.Namespace) -> int:
    catalog = build_standard_catalog(args.catalog)
    for ring in catalog.rings:
        print(f"ring {ring.name}  order={ring.order}")
    for module in catalog.modules:
        print(f"module {module.name}  order={module.order}")
    for example in catalog.z_examples:
        print(f"z {example.name}  module={example.module.name}")
    for key, value in config.settings_summary().items():
        print(f"setting {key}={value}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graded")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_check = sub.add_parser("check", help="Decide one predicate on a structure document.")
    p_check.add_argument("predicate", choices=PREDICATES)
    p_check.add_argument("-s", dest="structure", required=True, metavar="FILE")
    p_check.add_argument("-N", dest="submodule", metavar="NAME")
    p_check.add_argument("-I", dest="ideal", metavar="NAME")
    p_check.add_argument("--expect", choices=("true", "false"))
    p_check.add_argument("--json", metavar="FILE")
    p_check.set_defaults(func=cmd_check)

    p_enum = sub.add_parser("enumerate", help="List graded ideals or submodules.")
    p_enum.add_argument("what", choices=("ideals", "submodules"))
    p_enum.add_argument("-s", dest="structure", required=True, metavar="FILE")
    p_enum.add_argument("--json", metavar="FILE")
    p_enum.set_defaults(func=cmd_enumerate)

    p_verify = sub.add_parser("verify", help="Sweep one theorem, or all, over a catalog.")
    p_verify.add_argument("theorem", metavar="THEOREM", help=f"all or one of {', '.join(THEOREM_IDS)}")
    p_verify.add_argument("--catalog", default=config.CATALOG_PROFILE)
    p_verify.add_argument("--json", metavar="FILE")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="Look for quasi-semiprime, non-semiprime submodules.")
    p_search.add_argument("--catalog", default=config.CATALOG_PROFILE)
    p_search.add_argument("--json", metavar="FILE")
    p_search.set_defaults(func=cmd_search)

    p_cat = sub.add_parser("catalog", help="Show what a catalog profile contains.")
    p_cat.add_argument("action", choices=("list",))
    p_cat.add_argument("--catalog", default=config.CATALOG_PROFILE)
    p_cat.set_defaults(func=cmd_catalog)
    return parser


def run_command(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    argv = sys.argv[1:] if argv is None else list(argv)
    # Reserved: every procedure is deterministic.
    if "--seedless" in argv:
        print("error: --seedless is reserved; nothing here is randomized", file=sys.stderr)
        return 2
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except (UsageError, StructureError, AlgebraError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> int:
    return run_command(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
