"""Value Objects for the verification toolkit domain.

Value objects are immutable objects that represent numerical concepts
with no identity. They are compared by their attribute values.
"""

from .airy_triple import AiryTriple
from .convention_choice import ConventionChoice, SConvention, VALID_S_CONVENTIONS
from .scattering_parameters import ScatteringParameters
from .similarity_point import SimilarityPoint
from .stokes_data import StokesData

__all__ = [
    "AiryTriple",
    "ConventionChoice",
    "SConvention",
    "VALID_S_CONVENTIONS",
    "ScatteringParameters",
    "SimilarityPoint",
    "StokesData",
]
