"""Numerics Configuration - Single Source of Truth.

This module centralizes every tolerance, default resolution and
discretisation constant used by the verification toolkit. Domain services
and use cases MUST import from here so that the acceptance thresholds and
the solver defaults stay consistent across the CLI, the reports and the
tests.

Configuration Categories:
    - Accuracy targets: Airy, quadrature, Painlevé and hierarchy residuals
    - Tolerance profiles: 'default', 'strict' and the opt-in 'relaxed' thresholds
    - Solver defaults: pseudospectral grid, time step, scattering step
    - Quadrature defaults: ray radius, panel layout, refinement attempts
    - Painlevé defaults: shooting anchor, tabulation range, tolerances

Usage:
    from src.app.core.domain.config import (
        QUADRATURE_TOLERANCE,
        SolverDefaults,
        get_tolerance_profile,
    )

    profile = get_tolerance_profile("strict")
    if tail_fraction > profile.wrap_tolerance:
        raise WrapAroundError(tail_fraction, profile.wrap_tolerance)

Note:
    - Runtime environment settings are in src/app/infrastructure/settings/
"""

from dataclasses import dataclass
from typing import Final

from ..errors import UsageError


# =============================================================================
# ACCURACY TARGETS
# =============================================================================

AIRY_ACCURACY: Final[float] = 1e-12

# Ray quadrature against airy_eval; imaginary residue of a real quantity
QUADRATURE_TOLERANCE: Final[float] = 1e-8
QUADRATURE_IMAG_TOLERANCE: Final[float] = 1e-10

# Nested two-dimensional cross-check of the sigma_3 part of m12
NESTED_QUADRATURE_TOLERANCE: Final[float] = 1e-6

PAINLEVE_RESIDUAL_TOLERANCE: Final[float] = 1e-8
HIERARCHY_RESIDUAL_TOLERANCE: Final[float] = 1e-6

# u_j = -2 (g_j)_21 and similar algebraic identities
CONSISTENCY_TOLERANCE: Final[float] = 1e-10

# r(k) = -conj(r(-k)) after the scattering solve
SYMMETRY_TOLERANCE: Final[float] = 1e-10

# r(0) of a zero-mass datum vanishes to this level
ZERO_MASS_TOLERANCE: Final[float] = 1e-10

# Raw structure of r(0), r'(0), r''(0) before it is enforced exactly
STRUCTURE_TOLERANCE: Final[float] = 1e-8

# r'(0) below this counts as vanishing when picking the leading order
LEADING_TERM_TOLERANCE: Final[float] = 1e-6

# u0(-x) = +-u0(x) to this level, relative to max|u0|
PARITY_TOLERANCE: Final[float] = 1e-10

# Coefficients of the model problem must vanish this far right
DECAY_CHECK_Y: Final[float] = 8.0
DECAY_TOLERANCE: Final[float] = 1e-6


# =============================================================================
# TOLERANCE PROFILES
# =============================================================================

DEFAULT_SLOPE_TOLERANCE: Final[float] = 0.15
BORN_SLOPE_TOLERANCE: Final[float] = 0.1
LEADING_RATIO_TOLERANCE: Final[float] = 0.10
MIN_SLOPE_SAMPLES: Final[int] = 4

# Share of the L2 energy allowed in the outer edge band
DEFAULT_WRAP_TOLERANCE: Final[float] = 1e-10


@dataclass(frozen=True)
class ToleranceProfile:
    """Verification thresholds selected with --tolerance-profile.

    Attributes:
        name: Profile identifier.
        slope: Allowed deviation of a fitted decay exponent.
        conservation_drift: Allowed relative drift of mass and L2 norm.
        wrap_tolerance: Allowed fraction of L2 energy in the outer 5% band.
        leading_ratio: Allowed deviation of u_pde / (u1 t^{-1/3}) from 1.
    """

    name: str
    slope: float = DEFAULT_SLOPE_TOLERANCE
    conservation_drift: float = 1e-8
    wrap_tolerance: float = DEFAULT_WRAP_TOLERANCE
    leading_ratio: float = LEADING_RATIO_TOLERANCE


TOLERANCE_PROFILES: Final[dict[str, ToleranceProfile]] = {
    "default": ToleranceProfile(name="default"),
    "strict": ToleranceProfile(
        name="strict",
        slope=0.1,
        conservation_drift=1e-10,
        wrap_tolerance=1e-10,
        leading_ratio=0.05,
    ),
    # Opt-in loose wrap guard for small fixed grids
    "relaxed": ToleranceProfile(name="relaxed", wrap_tolerance=1e-4),
}


def get_tolerance_profile(name: str) -> ToleranceProfile:
    """Look up a tolerance profile by name.

    Raises:
        UsageError: If the profile is unknown.
    """
    try:
        return TOLERANCE_PROFILES[name]
    except KeyError:
        raise UsageError(name, "Unknown tolerance profile") from None


# =============================================================================
# PDE SOLVER DEFAULTS
# =============================================================================

DEFAULT_HALF_PERIOD: Final[float] = 1200.0
DEFAULT_MODES: Final[int] = 2**15
DEFAULT_TIME_STEP: Final[float] = 0.05

# Grids sized from the horizon keep at most this share of the wrap
# tolerance in the datum spectrum beyond the resolved cutoff
SIZING_SAFETY: Final[float] = 0.5
MAX_AUTO_MODES: Final[int] = 2**22

# Width of the edge band monitored for wrap-around, as a fraction of 2L
WRAP_BAND_FRACTION: Final[float] = 0.05

DEFAULT_TIMES: Final[tuple[float, ...]] = (20.0, 40.0, 80.0, 160.0)
DEFAULT_SECTOR_WIDTH: Final[float] = 2.0
DEFAULT_Y_POINTS: Final[int] = 201


@dataclass(frozen=True)
class SolverDefaults:
    """Pseudospectral reference solver defaults.

    Floors of the horizon-sized grid; explicit values fix the grid instead.

    Attributes:
        half_period: Domain is (-L, L).
        modes: Number of grid points, a power of two.
        dt: Nominal time step.
    """

    half_period: float = DEFAULT_HALF_PERIOD
    modes: int = DEFAULT_MODES
    dt: float = DEFAULT_TIME_STEP


# =============================================================================
# SCATTERING DEFAULTS
# =============================================================================

# RK4 step h must satisfy h <= min(MAX_SCATTERING_STEP, MAX_PHASE_STEP / |k|)
MAX_SCATTERING_STEP: Final[float] = 0.01
MAX_PHASE_STEP: Final[float] = 0.1

DEFAULT_DATUM_SPACING: Final[float] = 0.0025
DEFAULT_SUPPORT_RADIUS: Final[float] = 40.0

# Uniform cluster around k = 0 used for derivatives at the origin
K_CLUSTER_HALF_WIDTH: Final[float] = 0.1
K_CLUSTER_SPACING: Final[float] = 0.0125
K_MAX: Final[float] = 12.0
K_TAIL_POINTS: Final[int] = 160
MIN_CLUSTER_POINTS: Final[int] = 5


# =============================================================================
# QUADRATURE DEFAULTS
# =============================================================================

DEFAULT_RAY_RADIUS: Final[float] = 6.0
MIN_RAY_RADIUS: Final[float] = 6.0
TRUNCATION_PROBE_FACTOR: Final[float] = 1.25


@dataclass(frozen=True)
class QuadratureDefaults:
    """Gauss-Legendre panel layout along the rays.

    Attributes:
        radius: Truncation radius R of each ray.
        nodes_per_panel: Gauss-Legendre nodes per panel.
        panel_width: Width of the uniform outer panels.
        grading_levels: Number of geometrically shrinking panels at the origin.
        grading_ratio: Ratio between consecutive graded panels.
        refinement_attempts: Panel refinements tried before giving up.
        tail_extent: Length of the y-interval used for integrals to +infinity.
    """

    radius: float = DEFAULT_RAY_RADIUS
    nodes_per_panel: int = 20
    panel_width: float = 0.5
    grading_levels: int = 8
    grading_ratio: float = 0.5
    refinement_attempts: int = 3
    tail_extent: float = 12.0


# Coarse layout for the nested two-dimensional cross-check
NESTED_NODES_PER_PANEL: Final[int] = 12


# =============================================================================
# PAINLEVE DEFAULTS
# =============================================================================

PAINLEVE_Y_MIN: Final[float] = -8.0
PAINLEVE_Y_MAX: Final[float] = 8.0
MIN_PAINLEVE_Y_MAX: Final[float] = 6.0
SHOOTING_ANCHOR: Final[float] = 10.0
CHEBYSHEV_NODES: Final[int] = 256

# Leftward shooting is retried with progressively tighter tolerances
SHOOTING_RTOLS: Final[tuple[float, ...]] = (1e-12, 1e-13, 3e-14)
SHOOTING_ATOL: Final[float] = 1e-16
BLOWUP_BOUND: Final[float] = 1e3


@dataclass(frozen=True)
class PainleveDefaults:
    """Painlevé II tabulation defaults.

    Attributes:
        y_min: Left end of the table.
        y_max: Right end of the table.
        anchor: Shooting starts at max(y_max, anchor).
        nodes: Chebyshev nodes of the table.
    """

    y_min: float = PAINLEVE_Y_MIN
    y_max: float = PAINLEVE_Y_MAX
    anchor: float = SHOOTING_ANCHOR
    nodes: int = CHEBYSHEV_NODES


# =============================================================================
# HIERARCHY CHECK
# =============================================================================

HIERARCHY_INTERVAL: Final[tuple[float, float]] = (-4.0, 4.0)

# Trailing Chebyshev coefficients below this (relative) are dropped before
# differentiating
CHEBYSHEV_CHOP_TOLERANCE: Final[float] = 1e-14
