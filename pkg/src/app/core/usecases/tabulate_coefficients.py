"""Tabulate Coefficients Use Case.

Builds the asymptotic series for given scattering parameters, writes the
coefficient table u1, u2, u3 on a y-grid and checks the ODE hierarchy and
the identity u_j = -2 (g_j)_21 with the model-problem coefficients.
"""

from dataclasses import dataclass, field

import numpy as np

from ..domain.config import (
    CONSISTENCY_TOLERANCE,
    HIERARCHY_INTERVAL,
    HIERARCHY_RESIDUAL_TOLERANCE,
    PainleveDefaults,
)
from ..domain.entities import AsymptoticSeries, PainleveSolution
from ..domain.services import (
    coefficient_functions,
    coefficient_table,
    g_coefficients,
    hierarchy_residual,
    painleve2_solve,
)
from ..domain.value_objects import ScatteringParameters
from ..ports import ArtifactWriterPort, LoggingPort
from .compute_reflection import complex_pair

COEFFICIENT_TABLE = "coefficients.csv"
COEFFICIENT_HEADER = "coefficients.json"

# Points of the coefficient grid at which the g-identity is checked
_CONSISTENCY_POINTS = 21


@dataclass(frozen=True)
class TabulateCoefficientsResult:
    """Result of the tabulate coefficients use case.

    Attributes:
        series: The asymptotic series that was tabulated.
        table: Columns y, u1, u2, u3.
        hierarchy: max |residual| per hierarchy equation j.
        consistency: max |u_j + 2 (g_j)_21| per j.
        artifacts: Paths of the written files.
    """

    series: AsymptoticSeries
    table: dict[str, np.ndarray]
    hierarchy: dict[int, float] = field(default_factory=dict)
    consistency: dict[int, float] = field(default_factory=dict)
    artifacts: tuple[str, ...] = ()

    @property
    def hierarchy_ok(self) -> bool:
        """All hierarchy residuals within 1e-6."""
        return all(v <= HIERARCHY_RESIDUAL_TOLERANCE for v in self.hierarchy.values())

    @property
    def consistency_ok(self) -> bool:
        """All g-identities within 1e-10."""
        return all(v <= CONSISTENCY_TOLERANCE for v in self.consistency.values())


class TabulateCoefficientsUseCase:
    """Use case for the coefficient table and its self-checks."""

    def __init__(self, artifacts: ArtifactWriterPort, logger: LoggingPort) -> None:
        """Initialize the use case.

        Args:
            artifacts: Writer for the table.
            logger: Logging port for structured logging.
        """
        self._artifacts = artifacts
        self._logger = logger

    def _painleve(self, parameters: ScatteringParameters, y: np.ndarray) -> PainleveSolution | None:
        if parameters.has_vanishing_s():
            return None
        defaults = PainleveDefaults()
        y_min = min(defaults.y_min, float(np.min(y)), 1.5 * HIERARCHY_INTERVAL[0])
        return painleve2_solve(parameters.s, y_min=y_min, y_max=defaults.y_max)

    def execute(
        self,
        parameters: ScatteringParameters,
        order: int,
        y: np.ndarray,
        painleve: PainleveSolution | None = None,
        check_hierarchy: bool = True,
        write_artifacts: bool = True,
    ) -> TabulateCoefficientsResult:
        """Execute the tabulate coefficients use case.

        Args:
            parameters: (s, r'(0), r''(0)).
            order: Truncation order N.
            y: Grid of similarity variables.
            painleve: Table of u_P; solved here when s != 0 and None.
            check_hierarchy: Whether to compute hierarchy and g residuals.
            write_artifacts: Whether to write coefficients.csv / .json.

        Returns:
            TabulateCoefficientsResult with table and residuals.

        Raises:
            UnsupportedOrderError: If N >= 2 while s != 0.
            DifferentiationError: If a hierarchy residual cannot be formed.
        """
        y = np.asarray(y, dtype=float)
        self._logger.info(
            "Tabulating coefficients",
            s=parameters.s,
            r0_prime=parameters.r0_prime,
            r0_second=parameters.r0_second,
            order=order,
            y_points=y.size,
        )
        if painleve is None:
            painleve = self._painleve(parameters, y)
        series = AsymptoticSeries(order=order, parameters=parameters, painleve=painleve)
        table = coefficient_table(y, series)

        hierarchy: dict[int, float] = {}
        consistency: dict[int, float] = {}
        if check_hierarchy:
            functions = coefficient_functions(series)
            lo, hi = HIERARCHY_INTERVAL
            residual_grid = np.linspace(lo, hi, 161)
            for j in sorted(functions):
                residual = hierarchy_residual(j, functions, residual_grid)
                hierarchy[j] = float(np.max(np.abs(residual)))

            check_y = np.linspace(float(np.min(y)), float(np.max(y)), _CONSISTENCY_POINTS)
            orders = tuple(sorted(functions))
            deviations: dict[int, list[float]] = {j: [] for j in orders}
            for point in check_y:
                g = g_coefficients(float(point), parameters, painleve, orders)
                for j in orders:
                    u_j = float(functions[j](np.array([point]))[0])
                    deviations[j].append(abs(u_j + 2.0 * g[j][1, 0]))
            consistency = {j: max(values) for j, values in deviations.items()}

            for j, value in hierarchy.items():
                if value > HIERARCHY_RESIDUAL_TOLERANCE:
                    self._logger.warning("Hierarchy residual above target", j=j, residual=value)

        paths: tuple[str, ...] = ()
        if write_artifacts:
            paths = (
                self._artifacts.write_table(COEFFICIENT_TABLE, table),
                self._artifacts.write_json(
                    COEFFICIENT_HEADER,
                    {
                        "order": order,
                        "s": complex_pair(parameters.s),
                        "r0_prime": parameters.r0_prime,
                        "r0_second": complex_pair(parameters.r0_second),
                        "hierarchy_residuals": {str(j): v for j, v in hierarchy.items()},
                        "consistency_residuals": {str(j): v for j, v in consistency.items()},
                    },
                ),
            )

        self._logger.info(
            "Coefficients tabulated",
            hierarchy=hierarchy,
            consistency=consistency,
        )
        return TabulateCoefficientsResult(
            series=series,
            table=table,
            hierarchy=hierarchy,
            consistency=consistency,
            artifacts=paths,
        )
