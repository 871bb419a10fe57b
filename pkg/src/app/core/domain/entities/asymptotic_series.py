"""Asymptotic Series Entity.

Truncated expansion u(x, t) ~ sum_{j<=N} u_j(y) t^{-j/3} in the Painlevé
sector. Orders beyond the first are only available when s = r(0) vanishes.
"""

from dataclasses import dataclass

from ..errors import DomainRangeError, UnsupportedOrderError
from ..value_objects import ScatteringParameters
from .painleve_solution import PainleveSolution

MAX_ORDER = 3


@dataclass(frozen=True)
class AsymptoticSeries:
    """Entity representing a truncated asymptotic series.

    Attributes:
        order: Truncation order N in {1, 2, 3}.
        parameters: (s, r'(0), r''(0)).
        painleve: Tabulated u_P for s != 0, None when s = 0.
    """

    order: int
    parameters: ScatteringParameters
    painleve: PainleveSolution | None = None

    def __post_init__(self) -> None:
        """Validate the order against the available coefficients."""
        if not 1 <= self.order <= MAX_ORDER:
            raise UnsupportedOrderError(self.order, f"Order must lie in 1..{MAX_ORDER}")
        if not self.parameters.has_vanishing_s():
            if self.order >= 2:
                raise UnsupportedOrderError(
                    self.order, "Orders beyond the first need s = r(0) = 0"
                )
            if self.painleve is None:
                raise DomainRangeError(self.parameters.s, "Non-zero s needs a Painlevé table")

    @property
    def s(self) -> complex:
        """Stokes parameter s."""
        return self.parameters.s

    @property
    def expected_decay(self) -> float:
        """Exponent of the truncation error O(t^{-(N+1)/3})."""
        return -(self.order + 1) / 3.0

    def leading_order(self) -> int:
        """Index of the first non-trivial coefficient: 1 if s != 0, else 2."""
        return 2 if self.parameters.has_vanishing_s() else 1
