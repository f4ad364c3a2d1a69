"""Formatters for the logging pipeline.

The JSON formatter produces one document per record and lifts the
laboratory context (`stage`, `check_id`, free-form `context`) out of
the record extras, so experiment logs can be filtered per check.
"""

import json
import logging
from datetime import datetime, timezone

CONTEXT_FIELDS = ('stage', 'check_id')


class JsonFormatter(logging.Formatter):
    """Formats log records as JSON strings with structured context."""

    def format(self, record: logging.LogRecord) -> str:
        entry = {
            'timestamp': datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
        }
        for field in CONTEXT_FIELDS:
            value = getattr(record, field, None)
            if value is not None:
                entry[field] = value
        context = getattr(record, 'context', None)
        if context:
            entry['context'] = context
        if record.exc_info:
            entry['exception'] = self.formatException(record.exc_info)
        return json.dumps(entry, ensure_ascii=False, default=str)


def get_formatter(json_output: bool, fmt: str) -> logging.Formatter:
    """Returns the JSON formatter or a plain text one."""
    return JsonFormatter() if json_output else logging.Formatter(fmt)
