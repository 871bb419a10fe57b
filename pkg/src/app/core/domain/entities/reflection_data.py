"""Reflection Data Entity.

The reflection coefficient r(k) on a symmetric k-grid together with its
value and first two derivatives at k = 0.
"""

from dataclasses import dataclass, field

import numpy as np

from ..config import ZERO_MASS_TOLERANCE
from ..errors import ConventionError, DomainRangeError
from ..value_objects import ScatteringParameters


@dataclass(frozen=True, eq=False)
class ReflectionData:
    """Entity representing computed scattering data.

    Attributes:
        k_grid: Increasing grid, symmetric about 0.
        r_values: r(k) on the grid.
        r0: r(0), purely imaginary.
        r0_prime: r'(0), real.
        r0_second: r''(0), purely imaginary.
        symmetry_residual: max |r(k) + conj(r(-k))| over the grid.
        sup_abs: max |r(k)|, strictly below 1.
    """

    k_grid: np.ndarray
    r_values: np.ndarray
    r0: complex
    r0_prime: float
    r0_second: complex
    symmetry_residual: float
    sup_abs: float = field(init=False)

    def __post_init__(self) -> None:
        """Validate the symmetric grid and |r| < 1."""
        k = np.asarray(self.k_grid, dtype=float)
        r = np.asarray(self.r_values, dtype=complex)
        if k.shape != r.shape or k.ndim != 1:
            raise DomainRangeError(k.shape, "k-grid and r-values must match")
        if not np.allclose(k, -k[::-1], rtol=0.0, atol=1e-14 * max(1.0, float(np.max(np.abs(k))))):
            raise DomainRangeError("k_grid", "k-grid must be symmetric about 0")
        sup_abs = float(np.max(np.abs(r))) if r.size else 0.0
        if sup_abs >= 1.0:
            raise ConventionError("Reflection coefficient must satisfy |r| < 1", sup_abs)
        object.__setattr__(self, "k_grid", k)
        object.__setattr__(self, "r_values", r)
        object.__setattr__(self, "sup_abs", sup_abs)

    @property
    def parameters(self) -> ScatteringParameters:
        """The (s, r'(0), r''(0)) triple under the fixed convention s = r(0).

        |r(0)| at or below the zero-mass threshold is read as s = 0.
        """
        s = 0j if abs(self.r0) <= ZERO_MASS_TOLERANCE else self.r0
        return ScatteringParameters(s=s, r0_prime=self.r0_prime, r0_second=self.r0_second)
