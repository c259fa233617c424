#!/usr/bin/env python3
"""Replay every shipped document command and diff stdout against its golden file."""

from __future__ import annotations

import io
import json
import os
import sys
from contextlib import redirect_stdout
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from cli.main import run_command  # noqa: E402

MANIFEST = ROOT / "documents" / "examples.json"
GOLDEN_DIR = ROOT / "documents" / "golden"


def run_one(args: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    with redirect_stdout(out):
        status = run_command(args)
    return status, out.getvalue()


def main() -> int:
    os.chdir(ROOT)
    cases = json.loads(MANIFEST.read_text(encoding="utf-8"))
    drift = []
    for case in cases:
        status, stdout = run_one(case["args"])
        expected = (GOLDEN_DIR / case["golden"]).read_text(encoding="utf-8")
        if stdout != expected or status != case["status"]:
            drift.append((case, status, stdout, expected))

    if drift:
        print(f"{len(drift)} of {len(cases)} examples drifted:")
        for case, status, stdout, expected in drift:
            print(f"- {' '.join(case['args'])}")
            print(f"    status {status} (want {case['status']})")
            print(f"    got:  {stdout!r}")
            print(f"    want: {expected!r}")
        return 1

    print(f"All {len(cases)} examples match their golden output")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
