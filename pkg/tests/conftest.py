"""
Title: conftest.py Test
Description: Shared fixtures for the ktile test suite.
"""

import json
import logging

import pytest

from ktile.ktile_config import TABLE_FIXTURE_FILE
from ktile.ktile_seqcore import SequenceCache

KTILE_ENV = ("KTILE_ENUM_LIMIT", "KTILE_WORKERS", "KTILE_CACHE_FILE", "KTILE_MULTIPLIER_LIMIT", "KTILE_DEBUG")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in KTILE_ENV:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def restore_logging():
    # main() reconfigures the root logger; put pytest's handlers back afterwards
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def cache():
    return SequenceCache()


@pytest.fixture
def reference_table():
    """Reference rows keyed by label, plus the column list under 'n'."""
    with open(TABLE_FIXTURE_FILE, "r") as f:
        data = json.load(f)
    table = {row["label"]: row["values"] for row in data["rows"]}
    table["n"] = data["n"]
    return table
