"""Domain services.

Pure numerical algorithms operating on domain entities and value objects.
"""

from .airy import (
    airy_eval,
    airy_prime_square_tail,
    airy_prime_square_tail_exact,
    airy_square_tail,
    airy_triple,
)
from .asymptotics import (
    coefficient_functions,
    coefficient_table,
    hierarchy_residual,
    series_eval,
    series_on_grid,
    u1_eval,
    u2_eval,
    u3_eval,
)
from .families import BUILTIN_FAMILIES, CUSTOM_FAMILY, builtin_family
from .model_problem import (
    closed_form_coefficients,
    f1_closed_form,
    first_order_density,
    g_coefficients,
    m21_structured_form,
    mu1_w1_by_quadrature,
    nested_f1,
    quadrature_coefficients,
)
from .painleve import connection_asymptote, leading_model_coefficient, painleve2_solve
from .power_law import fit_slope, refinement_ratio
from .ray_quadrature import RayContour, airy_via_ray_quadrature
from .scattering import (
    assemble_reflection,
    born_reflection,
    clustered_k_grid,
    compute_reflection,
    derivatives_at_zero,
    jump_matrix,
    jump_symmetry_residual,
    linear_reconstruction,
    reflection_values,
)
from .spectral_mkdv import SolverGrid, evolve, linear_evolve, sample

__all__ = [
    "airy_eval",
    "airy_prime_square_tail",
    "airy_prime_square_tail_exact",
    "airy_square_tail",
    "airy_triple",
    "coefficient_functions",
    "coefficient_table",
    "hierarchy_residual",
    "series_eval",
    "series_on_grid",
    "u1_eval",
    "u2_eval",
    "u3_eval",
    "BUILTIN_FAMILIES",
    "CUSTOM_FAMILY",
    "builtin_family",
    "closed_form_coefficients",
    "f1_closed_form",
    "first_order_density",
    "g_coefficients",
    "m21_structured_form",
    "mu1_w1_by_quadrature",
    "nested_f1",
    "quadrature_coefficients",
    "connection_asymptote",
    "leading_model_coefficient",
    "painleve2_solve",
    "fit_slope",
    "refinement_ratio",
    "RayContour",
    "airy_via_ray_quadrature",
    "assemble_reflection",
    "born_reflection",
    "clustered_k_grid",
    "compute_reflection",
    "derivatives_at_zero",
    "jump_matrix",
    "jump_symmetry_residual",
    "linear_reconstruction",
    "reflection_values",
    "SolverGrid",
    "evolve",
    "linear_evolve",
    "sample",
]
