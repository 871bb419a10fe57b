"""Similarity Point Value Object.

A space-time point (x, t) together with its Painlevé variable
y = x (3t)^{-1/3}.
"""

from dataclasses import dataclass, field

import numpy as np

from ..errors import DomainRangeError, NonFiniteInputError


@dataclass(frozen=True)
class SimilarityPoint:
    """Immutable point of the Painlevé sector.

    Attributes:
        x: Spatial coordinate.
        t: Time, at least 1.
        y: Similarity variable, derived.
    """

    x: float
    t: float
    y: float = field(init=False)

    def __post_init__(self) -> None:
        """Validate (x, t) and derive y."""
        if not (np.isfinite(self.x) and np.isfinite(self.t)):
            raise NonFiniteInputError("SimilarityPoint", "x and t must be finite")
        if self.t < 1.0:
            raise DomainRangeError(self.t, "Time must satisfy t >= 1")
        object.__setattr__(self, "y", self.x / np.cbrt(3.0 * self.t))

    @classmethod
    def from_y(cls, y: float, t: float) -> "SimilarityPoint":
        """Create the point with similarity variable y at time t."""
        if t < 1.0:
            raise DomainRangeError(t, "Time must satisfy t >= 1")
        return cls(x=float(y) * float(np.cbrt(3.0 * t)), t=t)

    def in_sector(self, sector_width: float) -> bool:
        """Whether |x| <= M t^{1/3} for M = sector_width."""
        return abs(self.x) <= sector_width * np.cbrt(self.t)
