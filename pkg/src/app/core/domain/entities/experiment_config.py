"""Experiment Configuration Entity.

Validated description of one verification run.
"""

from dataclasses import dataclass, field
from typing import Any

from ..config import (
    DEFAULT_SECTOR_WIDTH,
    DEFAULT_TIME_STEP,
    DEFAULT_TIMES,
    DEFAULT_Y_POINTS,
    TOLERANCE_PROFILES,
)
from ..errors import DomainRangeError, UnsupportedOrderError, UsageError


@dataclass(frozen=True)
class ExperimentConfig:
    """Entity representing a verification experiment.

    Attributes:
        family: Built-in family name or 'custom-csv'.
        family_params: Family parameters, e.g. {'epsilon': 0.05}.
        sector_width: M, the sector is |x| <= M t^{1/3}.
        times: Ascending sample times, all >= 1.
        order: Truncation order N.
        half_period: PDE domain half width L; None sizes it from the last time.
        modes: PDE grid size; None sizes it from the datum spectrum.
        dt: PDE time step.
        tolerance_profile: 'default', 'strict' or 'relaxed'.
        y_points: Size of the y-grid on which errors are measured.
    """

    family: str
    family_params: dict[str, Any] = field(default_factory=dict)
    sector_width: float = DEFAULT_SECTOR_WIDTH
    times: tuple[float, ...] = DEFAULT_TIMES
    order: int = 1
    half_period: float | None = None
    modes: int | None = None
    dt: float = DEFAULT_TIME_STEP
    tolerance_profile: str = "default"
    y_points: int = DEFAULT_Y_POINTS

    def __post_init__(self) -> None:
        """Validate ranges."""
        if self.sector_width <= 0:
            raise DomainRangeError(self.sector_width, "Sector width M must be positive")
        if not self.times:
            raise DomainRangeError(self.times, "At least one sample time is required")
        if any(t < 1.0 for t in self.times):
            raise DomainRangeError(self.times, "Sample times must be >= 1")
        if any(b <= a for a, b in zip(self.times, self.times[1:])):
            raise DomainRangeError(self.times, "Sample times must be strictly ascending")
        if self.order not in (1, 2, 3):
            raise UnsupportedOrderError(self.order, "Order must be 1, 2 or 3")
        if self.half_period is not None and self.half_period <= 0:
            raise DomainRangeError(self.half_period, "Half period must be positive")
        if self.dt <= 0:
            raise DomainRangeError(self.dt, "Time step must be positive")
        if self.y_points < 3:
            raise DomainRangeError(self.y_points, "Need at least 3 y-points")
        if self.tolerance_profile not in TOLERANCE_PROFILES:
            raise UsageError(self.tolerance_profile, "Unknown tolerance profile")

    @property
    def y_bound(self) -> float:
        """Largest |y| in the sector, M / 3^{1/3}."""
        return self.sector_width / 3.0 ** (1.0 / 3.0)
