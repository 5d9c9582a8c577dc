# -*- coding: utf-8 -*-

import json, logging, sys

# Attributes every LogRecord has; anything else came through ``extra``
_RESERVED = frozenset(vars(logging.makeLogRecord({})).keys()) | {"message"}


class JsonLineFormatter(logging.Formatter):
    """Formats each log record as a single JSON object."""

    def format(self, record: logging.LogRecord) -> str:
        entry = {
            "level": record.levelname.lower(),
            "logger": record.name,
            "message": record.getMessage(),
        }

        for key, value in vars(record).items():
            if key not in _RESERVED and not key.startswith("_"):
                entry[key] = value

        if record.exc_info:
            entry["exception"] = self.formatException(record.exc_info)

        return json.dumps(entry, default=str, sort_keys=False)


def setup_logging(level: int = logging.WARNING) -> logging.Handler:
    """Send every log record to stderr as JSON lines."""

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JsonLineFormatter())

    root = logging.getLogger()
    root.handlers = [handler]
    root.setLevel(level)

    return handler
