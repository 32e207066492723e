"""
WHY: To ensure logs stay structured and off stdout.
WHAT: Tests for the JSON formatter and configure_logging.
HOW: Formats hand-built records and inspects the root logger after configuration.
"""

import json
import logging
import sys

from ktile.ktile_logging import JsonFormatter, configure_logging


def test_json_formatter_carries_context():
    """Do: Format a record with grid context. Verify: One JSON object with the extra fields."""
    record = logging.LogRecord("ktile.ktile_identities", logging.INFO, __file__, 1, "I-3.1: 5 passed", None, None)
    record.identity = "I-3.1"
    record.k = 2
    payload = json.loads(JsonFormatter().format(record))
    assert payload["level"] == "INFO"
    assert payload["message"] == "I-3.1: 5 passed"
    assert (payload["identity"], payload["k"]) == ("I-3.1", 2)
    assert "n" not in payload


def test_configure_logging_modes(monkeypatch):
    """Verify: WARNING by default, DEBUG with JSON under KTILE_DEBUG=1; always stderr."""
    configure_logging()
    root = logging.getLogger()
    assert root.level == logging.WARNING
    assert len(root.handlers) == 1
    assert root.handlers[0].stream is sys.stderr

    monkeypatch.setenv("KTILE_DEBUG", "1")
    configure_logging()
    assert root.level == logging.DEBUG
    assert isinstance(root.handlers[0].formatter, JsonFormatter)
