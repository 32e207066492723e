"""
WHY: To provide a centralized, portable configuration layer for ktile.
WHAT: Defines environment-driven limits and dynamic path resolution for resources.
HOW: Uses pathlib for path handling; environment values are read lazily so overrides apply per call.
"""

import os
from pathlib import Path
from typing import Optional

from .ktile_errors import ConfigError

# Project Root Resolution
PROJECT_ROOT = Path(__file__).parent.parent
RESOURCES_DIR = PROJECT_ROOT / "resources"

# Resource Paths (Dynamic)
TABLE_FIXTURE_FILE = RESOURCES_DIR / "reference_table.json"

# Defaults
DEFAULT_ENUM_LIMIT = 24
DEFAULT_MULTIPLIER_LIMIT = 8
DEFAULT_WORKERS = 1

# The reference table covers n = 0..11
TABLE_N_MAX = 11

# L_0, L_1, L_2 of the classical Lucas sequence
CLASSIC_LUCAS_SEEDS = (2, 1, 3)


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def enumeration_limit() -> int:
    """Largest n accepted by the tiling enumerators (KTILE_ENUM_LIMIT)."""
    return _env_int("KTILE_ENUM_LIMIT", DEFAULT_ENUM_LIMIT)


def multiplier_limit() -> int:
    """Largest multiplier for the nk-indexed identities (KTILE_MULTIPLIER_LIMIT)."""
    return _env_int("KTILE_MULTIPLIER_LIMIT", DEFAULT_MULTIPLIER_LIMIT)


def worker_count() -> int:
    """Grid worker threads (KTILE_WORKERS)."""
    return _env_int("KTILE_WORKERS", DEFAULT_WORKERS, minimum=1)


def cache_file() -> Optional[Path]:
    """Warm cache file for the CLI (KTILE_CACHE_FILE), if set."""
    raw = os.environ.get("KTILE_CACHE_FILE", "").strip()
    return Path(raw) if raw else None
