"""Common CLI schemas."""

from typing import Any

from pydantic import BaseModel, Field


class ErrorResponse(BaseModel):
    """Standard error document written to stderr."""

    error: str = Field(description="Error type")
    message: str = Field(description="Human-readable error message")
    details: dict[str, Any] | None = Field(
        default=None,
        description="Additional error details",
    )


class ComplexValue(BaseModel):
    """A complex number as real and imaginary parts."""

    re: float
    im: float

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexValue":
        """Split a complex number."""
        z = complex(z)
        return cls(re=z.real, im=z.imag)
