"""Painlevé Solution Entity.

A tabulated real Ablowitz-Segur solution of u'' = y u + 2 u^3 with
u ~ alpha Ai(y) as y -> +infinity. The table is held as Chebyshev series
for u and u' on [y_min, y_max]; to the right of the table the solution is
continued by its Airy asymptote.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Chebyshev
from numpy.polynomial.chebyshev import chebpts1
from scipy.special import airy

from ..errors import DomainRangeError
from ..value_objects import StokesData


@dataclass(frozen=True, eq=False)
class PainleveSolution:
    """Entity representing a tabulated Painlevé II solution.

    Attributes:
        stokes: Stokes data (s, 0, -s).
        nodes: Chebyshev nodes of the table, increasing.
        values: u_P at the nodes.
        derivs: u_P' at the nodes.
        series: Chebyshev interpolant of u_P on [y_min, y_max].
        deriv_series: Chebyshev interpolant of u_P'.
        residual_max: max |u'' - y u - 2 u^3| over the interior nodes.
        method: 'shooting', 'collocation' or 'trivial'.
    """

    stokes: StokesData
    nodes: np.ndarray
    values: np.ndarray
    derivs: np.ndarray
    series: Chebyshev
    deriv_series: Chebyshev
    residual_max: float
    method: str = "shooting"

    @classmethod
    def zero(cls, y_min: float, y_max: float, node_count: int) -> "PainleveSolution":
        """The identically vanishing solution for s = 0."""
        nodes = 0.5 * (y_min + y_max) + 0.5 * (y_max - y_min) * chebpts1(node_count)
        zeros = np.zeros(node_count)
        empty = Chebyshev([0.0], domain=[y_min, y_max])
        return cls(
            stokes=StokesData.zero(),
            nodes=nodes,
            values=zeros,
            derivs=zeros.copy(),
            series=empty,
            deriv_series=empty,
            residual_max=0.0,
            method="trivial",
        )

    @property
    def s(self) -> complex:
        """Stokes parameter s."""
        return self.stokes.s

    @property
    def alpha(self) -> float:
        """Airy amplitude alpha = i s."""
        return self.stokes.airy_amplitude

    @property
    def y_min(self) -> float:
        """Left end of the table."""
        return float(self.series.domain[0])

    @property
    def y_max(self) -> float:
        """Right end of the table."""
        return float(self.series.domain[1])

    def _check_left(self, y: np.ndarray) -> None:
        if np.any(y < self.y_min - 1e-12):
            raise DomainRangeError(float(np.min(y)), "Point left of the Painlevé table")

    def evaluate(self, y: np.ndarray | float) -> np.ndarray:
        """Evaluate u_P(y); points right of the table use alpha Ai(y).

        Raises:
            DomainRangeError: If any point lies left of the table.
        """
        y = np.asarray(y, dtype=float)
        self._check_left(y)
        inside = np.clip(y, self.y_min, self.y_max)
        out = np.where(
            y <= self.y_max,
            self.series(inside),
            self.alpha * airy(np.maximum(y, self.y_max))[0],
        )
        return np.asarray(out, dtype=float)

    def derivative(self, y: np.ndarray | float) -> np.ndarray:
        """Evaluate u_P'(y) with the same continuation as `evaluate`."""
        y = np.asarray(y, dtype=float)
        self._check_left(y)
        inside = np.clip(y, self.y_min, self.y_max)
        out = np.where(
            y <= self.y_max,
            self.deriv_series(inside),
            self.alpha * airy(np.maximum(y, self.y_max))[1],
        )
        return np.asarray(out, dtype=float)

    def tail_integral_of_square(self, y: np.ndarray | float) -> np.ndarray:
        """Integral of u_P^2 from y to +infinity.

        The table part is integrated exactly on the Chebyshev series; the
        Airy continuation contributes alpha^2 (Ai'(Y)^2 - Y Ai(Y)^2) at Y = y_max.
        """
        y = np.asarray(y, dtype=float)
        self._check_left(y)
        y_max = self.y_max
        ai, aip, _, _ = airy(y_max)
        beyond = self.alpha**2 * (aip**2 - y_max * ai**2)
        antiderivative = (self.series**2).integ(lbnd=y_max)
        table_part = -antiderivative(np.minimum(y, y_max))
        ya = np.maximum(y, y_max)
        ai_y, aip_y, _, _ = airy(ya)
        airy_part = self.alpha**2 * (aip_y**2 - ya * ai_y**2)
        return np.asarray(np.where(y <= y_max, table_part + beyond, airy_part), dtype=float)

    def airy_ratio(self, y: float) -> float:
        """u_P(y) / Ai(y), which tends to alpha as y grows."""
        return float(self.evaluate(y) / airy(y)[0])
