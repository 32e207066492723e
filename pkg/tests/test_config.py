"""
WHY: To ensure environment overrides are read lazily and validated.
WHAT: Tests for the limit readers and the cache file path.
HOW: Uses monkeypatch to set environment variables; follows Guard -> Do -> Verify.
"""

import pytest

from ktile.ktile_config import (
    DEFAULT_ENUM_LIMIT,
    TABLE_FIXTURE_FILE,
    cache_file,
    enumeration_limit,
    multiplier_limit,
    worker_count,
)
from ktile.ktile_errors import ConfigError


def test_defaults():
    """Verify: Defaults apply when nothing is set."""
    assert enumeration_limit() == DEFAULT_ENUM_LIMIT
    assert multiplier_limit() == 8
    assert worker_count() == 1
    assert cache_file() is None
    assert TABLE_FIXTURE_FILE.exists()


def test_overrides(monkeypatch, tmp_path):
    """Do: Set every variable. Verify: Values are picked up without reimporting."""
    monkeypatch.setenv("KTILE_ENUM_LIMIT", "9")
    monkeypatch.setenv("KTILE_MULTIPLIER_LIMIT", "4")
    monkeypatch.setenv("KTILE_WORKERS", "3")
    monkeypatch.setenv("KTILE_CACHE_FILE", str(tmp_path / "c.txt"))
    assert (enumeration_limit(), multiplier_limit(), worker_count()) == (9, 4, 3)
    assert cache_file() == tmp_path / "c.txt"


@pytest.mark.parametrize("name,value", [
    ("KTILE_ENUM_LIMIT", "ten"),
    ("KTILE_ENUM_LIMIT", "-1"),
    ("KTILE_WORKERS", "0"),
])
def test_invalid_values(monkeypatch, name, value):
    """Guard: Non-integer or out-of-range value. Verify: ConfigError."""
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        enumeration_limit() if name == "KTILE_ENUM_LIMIT" else worker_count()
