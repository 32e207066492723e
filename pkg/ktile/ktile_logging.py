"""
Why: Centralizes logging configuration so library output never touches stdout.
What: Provides a setup function to configure JSON or console logging on stderr.
How: Uses Python's logging module with a JSON formatter that carries grid context.
"""

import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Optional

# Grid context callers attach through `extra=`
CONTEXT_FIELDS = ("identity", "k", "n")


class JsonFormatter(logging.Formatter):
    """Formatter that outputs one JSON object per record."""
    def format(self, record):
        log_record = {
            "timestamp": datetime.fromtimestamp(record.created, timezone.utc).isoformat(),
            "level": record.levelname,
            "module": record.module,
            "message": record.getMessage(),
        }
        for field in CONTEXT_FIELDS:
            if hasattr(record, field):
                log_record[field] = getattr(record, field)
        if record.exc_info:
            log_record["exception"] = self.formatException(record.exc_info)
        return json.dumps(log_record)


def configure_logging(debug: Optional[bool] = None) -> None:
    """Configures the root logger.

    Defaults to WARNING level with a plain format. Debug mode (the `debug`
    argument, or KTILE_DEBUG=1 when it is None) switches to DEBUG level and
    JSON lines. The handler always writes to stderr.
    """
    if debug is None:
        debug = os.environ.get("KTILE_DEBUG", "0") == "1"

    root = logging.getLogger()
    handler = logging.StreamHandler(sys.stderr)

    if debug:
        root.setLevel(logging.DEBUG)
        handler.setFormatter(JsonFormatter())
    else:
        root.setLevel(logging.WARNING)
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(name)s: %(message)s'))

    # Remove existing handlers to avoid duplicates
    if root.hasHandlers():
        root.handlers.clear()

    root.addHandler(handler)
