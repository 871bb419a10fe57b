"""Check Model Coefficients Use Case.

Compares the closed-form coefficients m11, m12, m21 of the model
Riemann-Hilbert problem with their contour-quadrature values on a grid of
(y, p1, p2), and runs the structural, decay and nested cross-checks.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

import numpy as np

from ..domain.config import (
    DECAY_CHECK_Y,
    DECAY_TOLERANCE,
    NESTED_QUADRATURE_TOLERANCE,
    QUADRATURE_TOLERANCE,
    STRUCTURE_TOLERANCE,
)
from ..domain.entities import ModelCoefficients, off_structure_norm
from ..domain.services import (
    RayContour,
    closed_form_coefficients,
    f1_closed_form,
    m21_structured_form,
    nested_f1,
    quadrature_coefficients,
)
from ..ports import ArtifactWriterPort, LoggingPort, TaskExecutorPort

RH_CHECK_TABLE = "rh_check.csv"
RH_CHECK_HEADER = "rh_check.json"

DEFAULT_Y_VALUES: tuple[float, ...] = (-2.0, -1.0, 0.0, 1.0, 2.0)
DEFAULT_P1_VALUES: tuple[float, ...] = (0.0, 1.0)
DEFAULT_P2_VALUES: tuple[complex, ...] = (0j, 1j)

# Pauli directions each coefficient may occupy
ALLOWED_STRUCTURE: dict[str, tuple[str, ...]] = {
    "m11": ("sigma1",),
    "m12": ("sigma1", "sigma3"),
    "m21": ("sigma2",),
}


@dataclass(frozen=True)
class CoefficientComparison:
    """Closed form against quadrature at one parameter point.

    Attributes:
        closed_form: Coefficients from Airy closed forms.
        quadrature: Coefficients from ray quadrature.
        abs_errors: Max entrywise deviation per coefficient.
        structure_violation: Largest Pauli component outside the allowed ones.
    """

    closed_form: ModelCoefficients
    quadrature: ModelCoefficients
    abs_errors: dict[str, float]
    structure_violation: float


@dataclass(frozen=True)
class CheckModelCoefficientsResult:
    """Result of the rh-check use case.

    Attributes:
        comparisons: One comparison per (y, p1, p2).
        max_abs_error: Largest closed-form/quadrature deviation.
        max_structure_violation: Largest off-structure component.
        decay_norm: Largest coefficient modulus at y = 8.
        nested_residual: max |F1 nested - F1 closed form| over the y-values.
        m21_form_discrepancy: Deviation between the explicit and the
            sigma3 sigma1 forms of m21.
        artifacts: Paths of the written files.
    """

    comparisons: tuple[CoefficientComparison, ...]
    max_abs_error: float
    max_structure_violation: float
    decay_norm: float
    nested_residual: float
    m21_form_discrepancy: float
    artifacts: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether every check meets its tolerance."""
        return (
            self.max_abs_error <= QUADRATURE_TOLERANCE
            and self.max_structure_violation <= STRUCTURE_TOLERANCE
            and self.decay_norm <= DECAY_TOLERANCE
            and self.nested_residual <= NESTED_QUADRATURE_TOLERANCE
        )


def _structure_violation(coefficients: ModelCoefficients) -> float:
    return max(
        off_structure_norm(matrix, ALLOWED_STRUCTURE[name])
        for name, matrix in coefficients.entries().items()
    )


class CheckModelCoefficientsUseCase:
    """Use case for the model-problem verification grid."""

    def __init__(
        self,
        executor: TaskExecutorPort,
        artifacts: ArtifactWriterPort,
        logger: LoggingPort,
    ) -> None:
        """Initialize the use case.

        Args:
            executor: Parallel map over parameter points.
            artifacts: Writer for the comparison table.
            logger: Logging port for structured logging.
        """
        self._executor = executor
        self._artifacts = artifacts
        self._logger = logger

    def _compare(
        self, point: tuple[float, float, complex], contour: RayContour
    ) -> CoefficientComparison:
        y, p1, p2 = point
        closed = closed_form_coefficients(y, p1, p2)
        quad = quadrature_coefficients(y, p1, p2, contour)
        return CoefficientComparison(
            closed_form=closed,
            quadrature=quad,
            abs_errors=closed.difference(quad),
            structure_violation=max(_structure_violation(closed), _structure_violation(quad)),
        )

    def execute(
        self,
        y_values: Sequence[float] = DEFAULT_Y_VALUES,
        p1_values: Sequence[float] = DEFAULT_P1_VALUES,
        p2_values: Sequence[complex] = DEFAULT_P2_VALUES,
        contour: RayContour | None = None,
        write_artifacts: bool = True,
    ) -> CheckModelCoefficientsResult:
        """Execute the model-problem checks.

        Args:
            y_values: Similarity variables to test.
            p1_values: Real p1 values.
            p2_values: Imaginary p2 values.
            contour: Ray layout; default radius 6.
            write_artifacts: Whether to write rh_check.csv / .json.

        Returns:
            CheckModelCoefficientsResult with all deviations.

        Raises:
            DomainRangeError: If the contour radius is below 6.
            QuadratureAccuracyError: If a ray integral misses its target.
        """
        contour = contour or RayContour()
        points = list(product(y_values, p1_values, p2_values))
        self._logger.info(
            "Checking model coefficients",
            points=len(points),
            radius=contour.radius,
            nodes_per_panel=contour.nodes_per_panel,
        )

        comparisons = tuple(self._executor.map(lambda p: self._compare(p, contour), points))
        max_abs_error = max((max(c.abs_errors.values()) for c in comparisons), default=0.0)
        max_structure = max((c.structure_violation for c in comparisons), default=0.0)

        decay_norm = closed_form_coefficients(DECAY_CHECK_Y, 1.0, 1j).max_norm()
        nested_residual = max(
            (abs(nested_f1(y) - f1_closed_form(y)) for y in y_values), default=0.0
        )
        m21_discrepancy = max(
            (
                float(
                    np.max(
                        np.abs(
                            closed_form_coefficients(y, 1.0, 0j).m21 - m21_structured_form(y, 1.0)
                        )
                    )
                )
                for y in y_values
            ),
            default=0.0,
        )

        result_paths: tuple[str, ...] = ()
        if write_artifacts:
            rows: dict[str, list[object]] = {
                "y": [], "p1": [], "p2_im": [], "entry": [],
                "closed_form": [], "quadrature": [], "abs_err": [],
            }
            for c in comparisons:
                for name, matrix in c.closed_form.entries().items():
                    rows["y"].append(c.closed_form.y)
                    rows["p1"].append(c.closed_form.p1)
                    rows["p2_im"].append(c.closed_form.p2.imag)
                    rows["entry"].append(name)
                    rows["closed_form"].append(float(np.max(np.abs(matrix))))
                    rows["quadrature"].append(float(np.max(np.abs(c.quadrature.entries()[name]))))
                    rows["abs_err"].append(c.abs_errors[name])
            result_paths = (
                self._artifacts.write_table(
                    RH_CHECK_TABLE, {k: np.asarray(v) for k, v in rows.items()}
                ),
                self._artifacts.write_json(
                    RH_CHECK_HEADER,
                    {
                        "radius": contour.radius,
                        "max_abs_error": max_abs_error,
                        "max_structure_violation": max_structure,
                        "decay_norm": decay_norm,
                        "nested_residual": nested_residual,
                        "m21_form_discrepancy": m21_discrepancy,
                    },
                ),
            )

        result = CheckModelCoefficientsResult(
            comparisons=comparisons,
            max_abs_error=max_abs_error,
            max_structure_violation=max_structure,
            decay_norm=decay_norm,
            nested_residual=nested_residual,
            m21_form_discrepancy=m21_discrepancy,
            artifacts=result_paths,
        )
        log = self._logger.info if result.passed else self._logger.warning
        log(
            "Model coefficient check finished",
            passed=result.passed,
            max_abs_error=max_abs_error,
            max_structure_violation=max_structure,
            decay_norm=decay_norm,
            nested_residual=nested_residual,
            m21_form_discrepancy=m21_discrepancy,
        )
        return result
