"""Logging Port.

Interface for structured progress and diagnostics logging.
"""

from typing import Any, Protocol


class LoggingPort(Protocol):
    """Port interface for logging operations.

    Use cases report progress and numerical diagnostics (drifts, residuals,
    fitted slopes) as keyword context rather than formatted text, so the
    adapter decides how numbers are rendered.
    """

    def info(self, msg: str, **context: Any) -> None:
        """Log a progress milestone."""
        ...

    def warning(self, msg: str, **context: Any) -> None:
        """Log a failed check or a degraded fallback.

        Args:
            msg: Short fixed message naming the check.
            **context: Numerical values behind the warning.
        """
        ...

    def error(self, msg: str, **context: Any) -> None:
        """Log a failure that aborts the current operation."""
        ...

    def debug(self, msg: str, **context: Any) -> None:
        """Log per-step solver detail."""
        ...
