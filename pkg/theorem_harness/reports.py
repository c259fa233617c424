"""Text and JSON renderings of theorem and search reports."""

from __future__ import annotations

import json
from typing import Any, Sequence

from theorem_harness.search import SearchReport
from theorem_harness.theorems import TheoremReport


def theorem_to_dict(report: TheoremReport, with_timing: bool = True) -> dict[str, Any]:
    out: dict[str, Any] = {
        "theorem_id": report.theorem_id,
        "status": report.status,
        "total": report.total,
        "skipped": report.skipped,
        "instances_checked": report.instances_checked,
        "vacuous": report.vacuous,
        "violations": [dict(v) for v in report.violations],
    }
    if with_timing:
        out["elapsed"] = round(report.elapsed, 3)
    return out


def render_theorem(report: TheoremReport) -> str:
    lines = [
        f"{report.theorem_id}  {report.status}  checked={report.instances_checked} "
        f"vacuous={report.vacuous} skipped={report.skipped} total={report.total}"
    ]
    for v in report.violations:
        lines.append("  violation: " + ", ".join(f"{k}={v[k]}" for k in sorted(v)))
    return "\n".join(lines)


def render_theorems(reports: Sequence[TheoremReport]) -> str:
    body = [render_theorem(r) for r in reports]
    failed = sum(1 for r in reports if not r.passed)
    body.append(f"{len(reports)} theorems, {failed} failing")
    return "\n".join(body)


def search_to_dict(report: SearchReport) -> dict[str, Any]:
    return {
        "space": report.space_description,
        "exhausted": report.exhausted,
        "found": [
            {"ring": h.ring, "module": h.module, "submodule": h.submodule} for h in report.found
        ],
        "z_hits": [
            {
                "name": h.name,
                "colon": h.colon,
                "witness": {"r": h.witness.r, "m": list(h.witness.m), "n": h.witness.n},
            }
            for h in report.z_hits
        ],
    }


def render_search(report: SearchReport) -> str:
    lines = [report.space_description]
    if report.found:
        lines += [f"found: {h.submodule} in {h.module}" for h in report.found]
    else:
        lines.append("found: none in the finite catalog")
    for h in report.z_hits:
        m = ",".join(map(str, h.witness.m))
        lines.append(
            f"Z: {h.name}  colon={h.colon}Z  witness: r={h.witness.r} m=({m}) n={h.witness.n}"
        )
    lines.append("exhausted" if report.exhausted else "not exhausted")
    return "\n".join(lines)


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
