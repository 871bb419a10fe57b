"""Use Cases for the Painlevé sector verification toolkit.

Use cases represent the operations exposed on the command line.
They orchestrate domain services and ports to accomplish specific tasks.

All use cases:
- Depend only on ports and domain objects
- Are synchronous (numerical work runs through TaskExecutorPort)
- Are 100% typed
- Contain no direct I/O
- Raise only domain errors
"""

from .check_model_coefficients import (
    CheckModelCoefficientsResult,
    CheckModelCoefficientsUseCase,
    CoefficientComparison,
)
from .compute_reflection import ComputeReflectionResult, ComputeReflectionUseCase
from .evolve_mkdv import EvolveMKdVResult, EvolveMKdVUseCase
from .probe_conventions import ProbeConventionsResult, ProbeConventionsUseCase
from .run_experiment import RunExperimentResult, RunExperimentUseCase
from .solve_painleve import SolvePainleveResult, SolvePainleveUseCase
from .tabulate_coefficients import TabulateCoefficientsResult, TabulateCoefficientsUseCase

__all__ = [
    # Scattering
    "ComputeReflectionUseCase",
    "ComputeReflectionResult",
    # PDE reference
    "EvolveMKdVUseCase",
    "EvolveMKdVResult",
    # Special functions
    "SolvePainleveUseCase",
    "SolvePainleveResult",
    # Asymptotics
    "TabulateCoefficientsUseCase",
    "TabulateCoefficientsResult",
    # Model problem
    "CheckModelCoefficientsUseCase",
    "CheckModelCoefficientsResult",
    "CoefficientComparison",
    # Harness
    "ProbeConventionsUseCase",
    "ProbeConventionsResult",
    "RunExperimentUseCase",
    "RunExperimentResult",
]
