"""Standard Logging Adapter.

Implements LoggingPort using Python's standard logging module.
"""

import logging
from typing import Any

import numpy as np

# Attributes of logging.LogRecord that `extra` must not overwrite
_RESERVED_KEYS = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime"}


def format_value(value: Any) -> str:
    """Render a context value compactly; floats keep 6 significant digits."""
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.6g}"
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return f"{z.real:.6g}{z.imag:+.6g}j"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(format_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(f"{k}:{format_value(v)}" for k, v in value.items()) + "}"
    return str(value)


class StandardLoggingAdapter:
    """Adapter implementing LoggingPort using standard logging.

    Wraps a standard library Logger. Context kwargs are appended to the
    message as key=value pairs and passed as `extra`; context bound with
    `bind` is attached to every record.

    Example:
        >>> logger = StandardLoggingAdapter(logging.getLogger("psv"))
        >>> logger.bind(command="verify").info("Slope fitted", slope=-0.68)
    """

    def __init__(self, logger: logging.Logger, **bound: Any) -> None:
        """Initialize the logging adapter.

        Args:
            logger: Standard library Logger instance.
            **bound: Context added to every record.
        """
        self._logger = logger
        self._bound = dict(bound)

    @property
    def name(self) -> str:
        """Return the logger name."""
        return self._logger.name

    def bind(self, **context: Any) -> "StandardLoggingAdapter":
        """Child adapter carrying additional persistent context."""
        return StandardLoggingAdapter(self._logger, **{**self._bound, **context})

    def _format_message(self, msg: str, context: dict[str, Any]) -> str:
        if not context:
            return msg
        ctx_str = " ".join(f"{k}={format_value(v)}" for k, v in context.items())
        return f"{msg} | {ctx_str}"

    def _log(self, level: int, msg: str, context: dict[str, Any]) -> None:
        merged = {**self._bound, **context}
        extra = {f"ctx_{k}" if k in _RESERVED_KEYS else k: v for k, v in merged.items()}
        self._logger.log(level, self._format_message(msg, merged), extra=extra)

    def info(self, msg: str, **context: Any) -> None:
        """Log an informational message."""
        self._log(logging.INFO, msg, context)

    def warning(self, msg: str, **context: Any) -> None:
        """Log a warning message."""
        self._log(logging.WARNING, msg, context)

    def error(self, msg: str, **context: Any) -> None:
        """Log an error message."""
        self._log(logging.ERROR, msg, context)

    def debug(self, msg: str, **context: Any) -> None:
        """Log a debug message."""
        self._log(logging.DEBUG, msg, context)
