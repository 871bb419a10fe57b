"""Solve Painlevé Use Case.

Tabulates the real Ablowitz-Segur solution u_P(y; s, 0, -s) and checks
the negation symmetry and the Airy ratio at the right end.
"""

from dataclasses import dataclass

import numpy as np

from ..domain.config import PainleveDefaults
from ..domain.entities import PainleveSolution
from ..domain.services import airy_eval, painleve2_solve
from ..ports import ArtifactWriterPort, LoggingPort
from .compute_reflection import complex_pair

PAINLEVE_TABLE = "painleve.csv"
PAINLEVE_HEADER = "painleve.json"

# u_P / Ai is read off here; it must already agree with alpha
AIRY_RATIO_Y = 6.0


@dataclass(frozen=True)
class SolvePainleveResult:
    """Result of the solve Painlevé use case.

    Attributes:
        solution: Tabulated solution.
        airy_ratio: u_P(6) / Ai(6), approximately alpha.
        negation_residual: max |u(s) + u(-s)| over the nodes, None if not checked.
        artifacts: Paths of the written files.
    """

    solution: PainleveSolution
    airy_ratio: float
    negation_residual: float | None
    artifacts: tuple[str, ...] = ()

    @property
    def alpha(self) -> float:
        """Airy amplitude alpha = i s."""
        return self.solution.alpha


class SolvePainleveUseCase:
    """Use case for tabulating Ablowitz-Segur solutions."""

    def __init__(self, artifacts: ArtifactWriterPort, logger: LoggingPort) -> None:
        """Initialize the use case.

        Args:
            artifacts: Writer for the table.
            logger: Logging port for structured logging.
        """
        self._artifacts = artifacts
        self._logger = logger

    def execute(
        self,
        s: complex,
        y_min: float = PainleveDefaults().y_min,
        y_max: float = PainleveDefaults().y_max,
        nodes: int = PainleveDefaults().nodes,
        check_negation: bool = True,
        write_artifacts: bool = True,
    ) -> SolvePainleveResult:
        """Execute the solve Painlevé use case.

        Args:
            s: Stokes parameter, purely imaginary with |s| < 1.
            y_min: Left end of the table.
            y_max: Right end of the table.
            nodes: Chebyshev nodes.
            check_negation: Also solve for -s and compare.
            write_artifacts: Whether to write painleve.csv / painleve.json.

        Returns:
            SolvePainleveResult with the table and checks.

        Raises:
            DomainRangeError: For invalid s or interval.
            SolverError: If no scheme reaches the residual target.
        """
        self._logger.info("Solving Painlevé II", s=complex(s), y_min=y_min, y_max=y_max)
        solution = painleve2_solve(s, y_min=y_min, y_max=y_max, node_count=nodes)

        ratio_y = min(AIRY_RATIO_Y, solution.y_max)
        airy_ratio = float(solution.evaluate(ratio_y)) / float(airy_eval(ratio_y))

        negation: float | None = None
        if check_negation and not solution.stokes.is_zero():
            mirrored = painleve2_solve(-complex(s), y_min=y_min, y_max=y_max, node_count=nodes)
            negation = float(np.max(np.abs(solution.values + mirrored.values)))

        self._logger.info(
            "Painlevé II solved",
            method=solution.method,
            residual_max=solution.residual_max,
            alpha=solution.alpha,
            airy_ratio=airy_ratio,
            negation_residual=negation,
        )

        paths: tuple[str, ...] = ()
        if write_artifacts:
            paths = (
                self._artifacts.write_table(
                    PAINLEVE_TABLE,
                    {"y": solution.nodes, "u": solution.values, "u_prime": solution.derivs},
                ),
                self._artifacts.write_json(
                    PAINLEVE_HEADER,
                    {
                        "s": complex_pair(solution.s),
                        "alpha": solution.alpha,
                        "y_min": solution.y_min,
                        "y_max": solution.y_max,
                        "nodes": int(solution.nodes.size),
                        "method": solution.method,
                        "residual_max": solution.residual_max,
                        "airy_ratio": airy_ratio,
                        "negation_residual": negation,
                    },
                ),
            )

        return SolvePainleveResult(
            solution=solution,
            airy_ratio=airy_ratio,
            negation_residual=negation,
            artifacts=paths,
        )
