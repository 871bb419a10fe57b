"""Initial Datum Entity.

A real, rapidly decaying initial profile u0 sampled on a uniform grid.
The datum feeds both the scattering transform and the PDE reference
solver; the latter needs it on its own grid, hence `resample`.
"""

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid
from scipy.interpolate import CubicSpline

from ..config import PARITY_TOLERANCE
from ..errors import DomainRangeError, NonFiniteInputError

Profile = Callable[[np.ndarray], np.ndarray]

# Values beyond the declared support radius must be negligible
TAIL_THRESHOLD = 1e-14


@dataclass(frozen=True, eq=False)
class InitialDatum:
    """Entity representing a sampled initial condition.

    Attributes:
        name: Family name or source file of the datum.
        grid: Uniform, increasing spatial grid.
        values: Real samples u0(grid).
        support_radius: |u0| < 1e-14 for |x| > support_radius.
        profile: Optional exact profile used for resampling.
        mass: Trapezoid approximation of the integral of u0.
    """

    name: str
    grid: np.ndarray
    values: np.ndarray
    support_radius: float
    profile: Profile | None = None
    mass: float = field(init=False)

    def __post_init__(self) -> None:
        """Validate grid and samples, then compute the mass."""
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.shape != values.shape or grid.size < 3:
            raise DomainRangeError(grid.shape, "Grid and values must be 1-D of equal length")
        if not (np.all(np.isfinite(grid)) and np.all(np.isfinite(values))):
            raise NonFiniteInputError(self.name, "Initial datum must be finite")
        steps = np.diff(grid)
        if np.any(steps <= 0) or not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise DomainRangeError(self.name, "Grid must be uniform and increasing")
        outside = np.abs(grid) > self.support_radius
        if np.any(np.abs(values[outside]) >= TAIL_THRESHOLD):
            raise DomainRangeError(
                float(np.max(np.abs(values[outside]))),
                "Datum is not negligible beyond its support radius",
            )
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "mass", float(trapezoid(values, grid)))

    @classmethod
    def from_profile(
        cls,
        name: str,
        profile: Profile,
        support_radius: float,
        spacing: float,
    ) -> "InitialDatum":
        """Sample an analytic profile on [-support_radius, support_radius].

        Args:
            name: Datum name.
            profile: Vectorised u0.
            support_radius: Half width of the sampled interval.
            spacing: Target grid spacing; adjusted so the end points are hit.

        Returns:
            A new InitialDatum carrying the profile for exact resampling.
        """
        n = int(np.ceil(2.0 * support_radius / spacing - 1e-9)) + 1
        grid = np.linspace(-support_radius, support_radius, n)
        values = np.asarray(profile(grid), dtype=float)
        return cls(
            name=name,
            grid=grid,
            values=values,
            support_radius=support_radius,
            profile=profile,
        )

    @property
    def spacing(self) -> float:
        """Grid spacing dx."""
        return float(self.grid[1] - self.grid[0])

    @property
    def l1_norm(self) -> float:
        """Integral of |u0|."""
        return float(trapezoid(np.abs(self.values), self.grid))

    def is_zero(self) -> bool:
        """Whether the datum vanishes identically."""
        return not np.any(self.values)

    def resample(self, x: np.ndarray) -> np.ndarray:
        """Evaluate u0 at arbitrary points.

        Uses the analytic profile when present, otherwise a cubic spline
        through the samples extended by zero outside the grid.
        """
        x = np.asarray(x, dtype=float)
        if self.profile is not None:
            return np.asarray(self.profile(x), dtype=float)
        inside = (x >= self.grid[0]) & (x <= self.grid[-1])
        out = np.zeros_like(x)
        out[inside] = CubicSpline(self.grid, self.values)(x[inside])
        return out

    def parity(self, tolerance: float = PARITY_TOLERANCE) -> int:
        """+1 for an even datum, -1 for an odd one, 0 otherwise.

        Compares u0(-x) with u0(x) on the sample grid, relative to max|u0|.
        The zero datum counts as even.
        """
        scale = float(np.max(np.abs(self.values)))
        if scale == 0.0:
            return 1
        mirrored = self.resample(-self.grid)
        if np.max(np.abs(mirrored - self.values)) <= tolerance * scale:
            return 1
        if np.max(np.abs(mirrored + self.values)) <= tolerance * scale:
            return -1
        return 0
