"""Airy Triple Value Object.

Value and first two derivatives of the Airy function Ai at a real point.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import NonFiniteInputError


@dataclass(frozen=True)
class AiryTriple:
    """Immutable (Ai, Ai', Ai'') sample.

    Attributes:
        y: Real evaluation point.
        ai: Ai(y).
        ai_prime: Ai'(y).
        ai_second: Ai''(y), equal to y * Ai(y).
    """

    y: float
    ai: float
    ai_prime: float
    ai_second: float

    def __post_init__(self) -> None:
        """Reject non-finite samples."""
        if not np.all(np.isfinite([self.y, self.ai, self.ai_prime, self.ai_second])):
            raise NonFiniteInputError("AiryTriple", "Airy sample must be finite")

    def derivative(self, order: int) -> float:
        """Return Ai^{(order)}(y) for order in {0, 1, 2}."""
        return (self.ai, self.ai_prime, self.ai_second)[order]

    def equation_residual(self) -> float:
        """Residual of the Airy equation Ai'' - y Ai."""
        return abs(self.ai_second - self.y * self.ai)
