"""Stokes Data Value Object.

Monodromy data (s1, s2, s3) of the Painlevé II Riemann-Hilbert problem.
Only the real Ablowitz-Segur class (s, 0, -s) with s purely imaginary and
|s| < 1 is solvable by this toolkit.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DomainRangeError, NonFiniteInputError

# Cyclic constraint and reality checks are algebraic; allow rounding only.
_CONSTRAINT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class StokesData:
    """Immutable Stokes multipliers.

    Attributes:
        s1: First Stokes multiplier.
        s2: Second Stokes multiplier.
        s3: Third Stokes multiplier.
    """

    s1: complex
    s2: complex
    s3: complex

    def __post_init__(self) -> None:
        """Validate finiteness and the cyclic constraint s1 - s2 + s3 + s1 s2 s3 = 0."""
        values = np.array([self.s1, self.s2, self.s3], dtype=complex)
        if not np.all(np.isfinite(values)):
            raise NonFiniteInputError("StokesData", "Stokes multipliers must be finite")
        if self.constraint_residual() > _CONSTRAINT_TOLERANCE:
            raise DomainRangeError(
                (self.s1, self.s2, self.s3),
                "Stokes multipliers violate s1 - s2 + s3 + s1*s2*s3 = 0",
            )

    @classmethod
    def ablowitz_segur(cls, s: complex) -> "StokesData":
        """Create the real, pole-free family (s, 0, -s).

        Args:
            s: Stokes parameter, purely imaginary with |s| < 1.

        Raises:
            DomainRangeError: If s is not purely imaginary or |s| >= 1.
        """
        s = complex(s)
        if not np.isfinite(s):
            raise NonFiniteInputError("s", "Stokes parameter must be finite")
        if abs(s.real) > _CONSTRAINT_TOLERANCE * max(1.0, abs(s)):
            raise DomainRangeError(s, "Stokes parameter must be purely imaginary")
        if abs(s) >= 1.0:
            raise DomainRangeError(s, "Stokes parameter must satisfy |s| < 1")
        return cls(s1=complex(0.0, s.imag), s2=0j, s3=complex(0.0, -s.imag))

    @classmethod
    def zero(cls) -> "StokesData":
        """Create trivial Stokes data, whose Painlevé solution is u = 0."""
        return cls(s1=0j, s2=0j, s3=0j)

    def constraint_residual(self) -> float:
        """Return |s1 - s2 + s3 + s1 s2 s3|."""
        return abs(self.s1 - self.s2 + self.s3 + self.s1 * self.s2 * self.s3)

    def is_real_class(self) -> bool:
        """Whether the data generate a real solution: s3 = conj(s1), s2 real."""
        return (
            abs(self.s3 - np.conj(self.s1)) <= _CONSTRAINT_TOLERANCE
            and abs(complex(self.s2).imag) <= _CONSTRAINT_TOLERANCE
        )

    @property
    def s(self) -> complex:
        """The parameter s of the family (s, 0, -s)."""
        return complex(self.s1)

    @property
    def airy_amplitude(self) -> float:
        """Real alpha with u_P(y) ~ alpha Ai(y) as y -> +infinity; alpha = i s."""
        return float((1j * complex(self.s1)).real)

    def is_zero(self) -> bool:
        """Check whether all multipliers vanish."""
        return abs(self.s1) == 0 and abs(self.s2) == 0 and abs(self.s3) == 0
