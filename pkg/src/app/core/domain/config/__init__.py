"""Domain Configuration Module.

Centralizes tolerances and numerical defaults for the verification toolkit.
"""

from .numerics_config import (
    # Accuracy targets
    AIRY_ACCURACY,
    QUADRATURE_TOLERANCE,
    QUADRATURE_IMAG_TOLERANCE,
    NESTED_QUADRATURE_TOLERANCE,
    PAINLEVE_RESIDUAL_TOLERANCE,
    HIERARCHY_RESIDUAL_TOLERANCE,
    CONSISTENCY_TOLERANCE,
    SYMMETRY_TOLERANCE,
    STRUCTURE_TOLERANCE,
    ZERO_MASS_TOLERANCE,
    LEADING_TERM_TOLERANCE,
    PARITY_TOLERANCE,
    DECAY_CHECK_Y,
    DECAY_TOLERANCE,
    # Profiles
    BORN_SLOPE_TOLERANCE,
    MIN_SLOPE_SAMPLES,
    DEFAULT_WRAP_TOLERANCE,
    TOLERANCE_PROFILES,
    ToleranceProfile,
    get_tolerance_profile,
    # PDE
    DEFAULT_HALF_PERIOD,
    DEFAULT_MODES,
    DEFAULT_TIME_STEP,
    DEFAULT_TIMES,
    DEFAULT_SECTOR_WIDTH,
    DEFAULT_Y_POINTS,
    WRAP_BAND_FRACTION,
    SIZING_SAFETY,
    MAX_AUTO_MODES,
    SolverDefaults,
    # Scattering
    MAX_SCATTERING_STEP,
    MAX_PHASE_STEP,
    DEFAULT_DATUM_SPACING,
    DEFAULT_SUPPORT_RADIUS,
    K_CLUSTER_HALF_WIDTH,
    K_CLUSTER_SPACING,
    K_MAX,
    K_TAIL_POINTS,
    MIN_CLUSTER_POINTS,
    # Quadrature
    DEFAULT_RAY_RADIUS,
    MIN_RAY_RADIUS,
    TRUNCATION_PROBE_FACTOR,
    NESTED_NODES_PER_PANEL,
    QuadratureDefaults,
    # Painleve
    MIN_PAINLEVE_Y_MAX,
    SHOOTING_RTOLS,
    SHOOTING_ATOL,
    BLOWUP_BOUND,
    PainleveDefaults,
    # Hierarchy
    HIERARCHY_INTERVAL,
    CHEBYSHEV_NODES,
    CHEBYSHEV_CHOP_TOLERANCE,
)

__all__ = [
    "AIRY_ACCURACY",
    "QUADRATURE_TOLERANCE",
    "QUADRATURE_IMAG_TOLERANCE",
    "NESTED_QUADRATURE_TOLERANCE",
    "PAINLEVE_RESIDUAL_TOLERANCE",
    "HIERARCHY_RESIDUAL_TOLERANCE",
    "CONSISTENCY_TOLERANCE",
    "SYMMETRY_TOLERANCE",
    "STRUCTURE_TOLERANCE",
    "ZERO_MASS_TOLERANCE",
    "LEADING_TERM_TOLERANCE",
    "PARITY_TOLERANCE",
    "DECAY_CHECK_Y",
    "DECAY_TOLERANCE",
    "BORN_SLOPE_TOLERANCE",
    "MIN_SLOPE_SAMPLES",
    "DEFAULT_WRAP_TOLERANCE",
    "TOLERANCE_PROFILES",
    "ToleranceProfile",
    "get_tolerance_profile",
    "DEFAULT_HALF_PERIOD",
    "DEFAULT_MODES",
    "DEFAULT_TIME_STEP",
    "DEFAULT_TIMES",
    "DEFAULT_SECTOR_WIDTH",
    "DEFAULT_Y_POINTS",
    "WRAP_BAND_FRACTION",
    "SIZING_SAFETY",
    "MAX_AUTO_MODES",
    "SolverDefaults",
    "MAX_SCATTERING_STEP",
    "MAX_PHASE_STEP",
    "DEFAULT_DATUM_SPACING",
    "DEFAULT_SUPPORT_RADIUS",
    "K_CLUSTER_HALF_WIDTH",
    "K_CLUSTER_SPACING",
    "K_MAX",
    "K_TAIL_POINTS",
    "MIN_CLUSTER_POINTS",
    "DEFAULT_RAY_RADIUS",
    "MIN_RAY_RADIUS",
    "TRUNCATION_PROBE_FACTOR",
    "NESTED_NODES_PER_PANEL",
    "QuadratureDefaults",
    "MIN_PAINLEVE_Y_MAX",
    "SHOOTING_RTOLS",
    "SHOOTING_ATOL",
    "BLOWUP_BOUND",
    "PainleveDefaults",
    "HIERARCHY_INTERVAL",
    "CHEBYSHEV_NODES",
    "CHEBYSHEV_CHOP_TOLERANCE",
]
