"""Domain Layer for the Painlevé sector verification toolkit.

This module contains the numerical core, including:
- Entities: Stateful numerical objects (InitialDatum, ReflectionData,
  PainleveSolution, EvolutionState, ModelCoefficients, VerificationReport)
- Value Objects: Immutable parameters (StokesData, ScatteringParameters, ...)
- Domain Errors: Validation and numerical failure exceptions
- Services: Pure numerical algorithms

The domain layer has no dependencies on I/O or infrastructure.
"""

from .entities import (
    AsymptoticSeries,
    ErrorSample,
    EvolutionState,
    ExperimentConfig,
    InitialDatum,
    ModelCoefficients,
    PainleveSolution,
    ReflectionData,
    ScatteringSummary,
    SlopeFit,
    Snapshot,
    SolverHealth,
    VerificationReport,
)
from .errors import (
    ArtifactError,
    ConventionError,
    DegenerateFitError,
    DifferentiationError,
    DomainError,
    DomainRangeError,
    InstabilityError,
    NonFiniteInputError,
    NumericalError,
    QuadratureAccuracyError,
    SolverError,
    UnsupportedOrderError,
    UsageError,
    WrapAroundError,
)
from .value_objects import (
    AiryTriple,
    ConventionChoice,
    ScatteringParameters,
    SimilarityPoint,
    StokesData,
)

__all__ = [
    # Entities
    "AsymptoticSeries",
    "ErrorSample",
    "EvolutionState",
    "ExperimentConfig",
    "InitialDatum",
    "ModelCoefficients",
    "PainleveSolution",
    "ReflectionData",
    "ScatteringSummary",
    "SlopeFit",
    "Snapshot",
    "SolverHealth",
    "VerificationReport",
    # Value objects
    "AiryTriple",
    "ConventionChoice",
    "ScatteringParameters",
    "SimilarityPoint",
    "StokesData",
    # Errors
    "ArtifactError",
    "ConventionError",
    "DegenerateFitError",
    "DifferentiationError",
    "DomainError",
    "DomainRangeError",
    "InstabilityError",
    "NonFiniteInputError",
    "NumericalError",
    "QuadratureAccuracyError",
    "SolverError",
    "UnsupportedOrderError",
    "UsageError",
    "WrapAroundError",
]
