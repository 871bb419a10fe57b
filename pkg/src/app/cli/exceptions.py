"""CLI Exception Handling.

Translates domain errors to process exit codes and a JSON error document
on stderr.
"""

import sys
from typing import Any, Final, TextIO

from src.app.cli.schemas.common import ErrorResponse
from src.app.core.domain.errors import (
    ArtifactError,
    ConventionError,
    DomainError,
    DomainRangeError,
    NonFiniteInputError,
    NumericalError,
    UnsupportedOrderError,
    UsageError,
)

EXIT_OK: Final[int] = 0
EXIT_VERIFICATION_FAILED: Final[int] = 1
EXIT_USAGE: Final[int] = 2
EXIT_DOMAIN: Final[int] = 3
EXIT_NUMERICAL: Final[int] = 4

# Checked in order; the first matching class wins
_EXIT_CODES: tuple[tuple[type[DomainError], int], ...] = (
    (UsageError, EXIT_USAGE),
    (ArtifactError, EXIT_USAGE),
    (NumericalError, EXIT_NUMERICAL),
    (ConventionError, EXIT_NUMERICAL),
    (DomainRangeError, EXIT_DOMAIN),
    (NonFiniteInputError, EXIT_DOMAIN),
    (UnsupportedOrderError, EXIT_DOMAIN),
)


def create_error_response(
    error: str,
    message: str,
    details: dict[str, Any] | None = None,
) -> ErrorResponse:
    """Create a standardized error document."""
    return ErrorResponse(error=error, message=message, details=details or None)


def exit_code_for(exc: DomainError) -> int:
    """Exit code of a domain error."""
    for error_type, code in _EXIT_CODES:
        if isinstance(exc, error_type):
            return code
    return EXIT_DOMAIN


def handle_domain_error(exc: DomainError, stream: TextIO | None = None) -> int:
    """Report a domain error on stderr and return its exit code."""
    stream = stream or sys.stderr
    details = {"value": repr(exc.value)} if exc.value is not None else None
    document = create_error_response(
        error=exc.__class__.__name__,
        message=exc.message,
        details=details,
    )
    stream.write(document.model_dump_json(exclude_none=True) + "\n")
    return exit_code_for(exc)
