"""Domain entities for the verification toolkit.

Entities carry numerical state with validation; they hold arrays and are
compared by identity.
"""

from .asymptotic_series import AsymptoticSeries, MAX_ORDER
from .evolution_state import EvolutionState, Snapshot
from .experiment_config import ExperimentConfig
from .initial_datum import InitialDatum, Profile
from .model_coefficients import (
    IDENTITY,
    SIGMA1,
    SIGMA2,
    SIGMA3,
    ModelCoefficients,
    off_structure_norm,
    pauli_components,
)
from .painleve_solution import PainleveSolution
from .reflection_data import ReflectionData
from .verification_report import (
    ErrorSample,
    ScatteringSummary,
    SlopeFit,
    SolverHealth,
    VerificationReport,
)

__all__ = [
    "AsymptoticSeries",
    "MAX_ORDER",
    "EvolutionState",
    "Snapshot",
    "ExperimentConfig",
    "InitialDatum",
    "Profile",
    "IDENTITY",
    "SIGMA1",
    "SIGMA2",
    "SIGMA3",
    "ModelCoefficients",
    "off_structure_norm",
    "pauli_components",
    "PainleveSolution",
    "ReflectionData",
    "ErrorSample",
    "ScatteringSummary",
    "SlopeFit",
    "SolverHealth",
    "VerificationReport",
]
