"""Scattering Parameters Value Object.

The three numbers of the reflection coefficient at k = 0 that feed the
asymptotic series: s = r(0), r'(0) and r''(0).
"""

from dataclasses import dataclass

import numpy as np

from ..errors import ConventionError, DomainRangeError, NonFiniteInputError

_CBRT3 = float(np.cbrt(3.0))


@dataclass(frozen=True)
class ScatteringParameters:
    """Immutable data (s, r'(0), r''(0)).

    Attributes:
        s: r(0), purely imaginary with |s| < 1.
        r0_prime: r'(0), real.
        r0_second: r''(0), purely imaginary.
    """

    s: complex
    r0_prime: float
    r0_second: complex

    def __post_init__(self) -> None:
        """Validate finiteness and the symmetry-imposed structure."""
        if not np.all(np.isfinite([self.s, self.r0_prime, self.r0_second])):
            raise NonFiniteInputError("ScatteringParameters", "Parameters must be finite")
        if complex(self.s).real != 0.0:
            raise ConventionError("r(0) must be purely imaginary", abs(complex(self.s).real))
        if complex(self.r0_second).real != 0.0:
            raise ConventionError(
                "r''(0) must be purely imaginary", abs(complex(self.r0_second).real)
            )
        if abs(self.s) >= 1.0:
            raise DomainRangeError(self.s, "|r(0)| must be below 1")

    @classmethod
    def zero(cls) -> "ScatteringParameters":
        """Create parameters of the zero datum."""
        return cls(s=0j, r0_prime=0.0, r0_second=0j)

    @property
    def p1(self) -> float:
        """Model-problem parameter p1 = r'(0) / 3^{1/3}."""
        return self.r0_prime / _CBRT3

    @property
    def p2(self) -> complex:
        """Model-problem parameter p2 = r''(0) / (2 * 3^{2/3})."""
        return complex(self.r0_second) / (2.0 * _CBRT3**2)

    def has_vanishing_s(self) -> bool:
        """Whether s = 0, so that higher orders are available."""
        return complex(self.s) == 0j
