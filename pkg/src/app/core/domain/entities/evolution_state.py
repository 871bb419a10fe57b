"""Evolution State Entity.

Spectral state of the periodic reference solver on (-L, L) together with
the conserved quantities recorded at t = 0.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DomainRangeError


@dataclass(frozen=True, eq=False)
class EvolutionState:
    """Entity representing the solver state at time t.

    Attributes:
        half_period: L, the domain is (-L, L).
        modes: N grid points, a power of two.
        t: Current time.
        u_hat: rfft coefficients of u on the grid x_j = -L + 2 L j / N.
        mass0: Integral of u at t = 0.
        l2_0: Integral of u^2 at t = 0.
        mass_scale: Reference scale for relative mass drift.
    """

    half_period: float
    modes: int
    t: float
    u_hat: np.ndarray
    mass0: float
    l2_0: float
    mass_scale: float

    def __post_init__(self) -> None:
        """Validate the grid description."""
        if self.modes < 8 or self.modes & (self.modes - 1):
            raise DomainRangeError(self.modes, "Number of modes must be a power of two >= 8")
        if self.half_period <= 0:
            raise DomainRangeError(self.half_period, "Half period must be positive")
        if self.u_hat.shape != (self.modes // 2 + 1,):
            raise DomainRangeError(self.u_hat.shape, "rfft storage has wrong length")

    @property
    def dx(self) -> float:
        """Grid spacing 2L / N."""
        return 2.0 * self.half_period / self.modes

    @property
    def x(self) -> np.ndarray:
        """Grid points."""
        return -self.half_period + self.dx * np.arange(self.modes)

    @property
    def u(self) -> np.ndarray:
        """Field values on the grid."""
        return np.fft.irfft(self.u_hat, n=self.modes)

    @property
    def mass(self) -> float:
        """Integral of u (from the zero mode)."""
        return float(self.u_hat[0].real * self.dx)

    @property
    def l2(self) -> float:
        """Integral of u^2."""
        return float(np.sum(self.u**2) * self.dx)

    def mass_drift(self) -> float:
        """Relative change of the mass since t = 0."""
        return abs(self.mass - self.mass0) / self.mass_scale if self.mass_scale else 0.0

    def l2_drift(self) -> float:
        """Relative change of the L2 norm squared since t = 0."""
        return abs(self.l2 - self.l2_0) / self.l2_0 if self.l2_0 else 0.0


@dataclass(frozen=True, eq=False)
class Snapshot:
    """Field and health diagnostics at one target time.

    Attributes:
        state: Solver state at the target time.
        mass_drift: Relative mass drift.
        l2_drift: Relative L2 drift.
        tail_fraction: Share of L2 energy in the outer edge band.
    """

    state: EvolutionState
    mass_drift: float
    l2_drift: float
    tail_fraction: float

    @property
    def t(self) -> float:
        """Snapshot time."""
        return self.state.t
