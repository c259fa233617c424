"""
Env wiring for the graded-structures engine.

Everything tunable lives here so the harness, oracle and CLI read one place.
A `.env` next to this file is loaded before any value is read.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv(Path(__file__).resolve().parent / ".env")

logger = logging.getLogger("graded.config")


def _int_env(name: str, default: int, minimum: int = 1) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer; using %d", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s=%d is below %d; using %d", name, value, minimum, default)
        return default
    return value


LOG_LEVEL = (os.getenv("GRADED_LOG_LEVEL") or "WARNING").strip().upper()
CATALOG_PROFILE = (os.getenv("GRADED_CATALOG_PROFILE") or "default").strip()

# Worker threads for `verify all`.
HARNESS_WORKERS = _int_env("GRADED_HARNESS_WORKERS", 4)

# Naive oracle refuses anything larger; it loops over raw subsets.
ORACLE_MAX_RING = _int_env("GRADED_ORACLE_MAX_RING", 8)
ORACLE_MAX_MODULE = _int_env("GRADED_ORACLE_MAX_MODULE", 16)

# Endomorphisms join the hom family for modules up to this order.
ENDOMORPHISM_MAX_ORDER = _int_env("GRADED_ENDOMORPHISM_MAX_ORDER", 8)

# Coordinate and exponent bound for refutation search over free Z-modules.
Z_SEARCH_BOUND = _int_env("GRADED_Z_SEARCH_BOUND", 8)


def settings_summary() -> dict[str, object]:
    """Effective settings, for `catalog list` and debugging."""
    return {
        "GRADED_LOG_LEVEL": LOG_LEVEL,
        "GRADED_CATALOG_PROFILE": CATALOG_PROFILE,
        "GRADED_HARNESS_WORKERS": HARNESS_WORKERS,
        "GRADED_ORACLE_MAX_RING": ORACLE_MAX_RING,
        "GRADED_ORACLE_MAX_MODULE": ORACLE_MAX_MODULE,
        "GRADED_ENDOMORPHISM_MAX_ORDER": ENDOMORPHISM_MAX_ORDER,
        "GRADED_Z_SEARCH_BOUND": Z_SEARCH_BOUND,
    }
