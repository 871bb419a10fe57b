"""Domain errors for the Painlevé sector verification toolkit.

All numerical and validation failures are defined here.
These errors represent violated preconditions, lost accuracy and
convention mismatches detected by the domain services.
"""

from typing import Any


class DomainError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str, value: Any = None) -> None:
        self.message = message
        self.value = value
        super().__init__(self.message)

    def __str__(self) -> str:
        if self.value is not None:
            return f"{self.message}: {self.value!r}"
        return self.message


# =============================================================================
# Input validation
# =============================================================================


class NonFiniteInputError(DomainError):
    """Raised when an argument contains NaN or infinity."""

    def __init__(self, name: str, reason: str = "Input must be finite") -> None:
        super().__init__(message=reason, value=name)


class DomainRangeError(DomainError):
    """Raised when an argument lies outside the supported range."""

    def __init__(self, value: Any, reason: str = "Value outside supported range") -> None:
        super().__init__(message=reason, value=value)


class UnsupportedOrderError(DomainError):
    """Raised when an expansion order is requested that is not available."""

    def __init__(self, order: int, reason: str = "Unsupported expansion order") -> None:
        super().__init__(message=reason, value=order)


class UsageError(DomainError):
    """Raised for invalid user-facing configuration (unknown family, bad file)."""

    def __init__(self, value: Any, reason: str = "Invalid usage") -> None:
        super().__init__(message=reason, value=value)


# =============================================================================
# Numerical failures
# =============================================================================


class NumericalError(DomainError):
    """Base class for failures of a numerical method."""


class QuadratureAccuracyError(NumericalError):
    """Raised when a contour quadrature cannot reach its accuracy target."""

    def __init__(self, estimate: float, target: float) -> None:
        super().__init__(
            message=f"Quadrature error estimate exceeds target {target:.1e}",
            value=estimate,
        )
        self.estimate = estimate
        self.target = target


class SolverError(NumericalError):
    """Raised when an ODE integration or collocation solve fails."""

    def __init__(self, reason: str, value: Any = None) -> None:
        super().__init__(message=reason, value=value)


class WrapAroundError(NumericalError):
    """Raised when radiation reaches the edge of the periodic domain."""

    def __init__(self, tail_fraction: float, tolerance: float) -> None:
        super().__init__(
            message=f"Tail energy fraction above wrap tolerance {tolerance:.1e}",
            value=tail_fraction,
        )
        self.tail_fraction = tail_fraction


class InstabilityError(NumericalError):
    """Raised when the time stepper produces NaN or overflow."""

    def __init__(self, t: float) -> None:
        super().__init__(message="Non-finite field during time stepping at t", value=t)


class DifferentiationError(NumericalError):
    """Raised when spectral differentiation is requested outside a smooth domain."""

    def __init__(self, value: Any, reason: str = "Cannot differentiate on grid") -> None:
        super().__init__(message=reason, value=value)


class DegenerateFitError(NumericalError):
    """Raised when a power-law fit has too few or non-positive samples."""

    def __init__(self, value: Any, reason: str = "Degenerate power-law fit") -> None:
        super().__init__(message=reason, value=value)


# =============================================================================
# Conventions
# =============================================================================


class ConventionError(DomainError):
    """Raised when computed data violates the fixed sign and symmetry conventions."""

    def __init__(self, reason: str, residual: float | None = None) -> None:
        super().__init__(message=reason, value=residual)
        self.residual = residual


# =============================================================================
# Persistence
# =============================================================================


class ArtifactError(DomainError):
    """Raised when an output artifact cannot be written or an input cannot be read."""

    def __init__(self, path: str, reason: str = "Artifact I/O failed") -> None:
        super().__init__(message=reason, value=path)
