"""Compute Reflection Use Case.

Runs the direct scattering transform of an initial datum on a symmetric
k-grid, extracts r(0), r'(0), r''(0) and compares the result with the
first-order Born approximation.
"""

from dataclasses import dataclass

import numpy as np

from ..domain.config import SYMMETRY_TOLERANCE
from ..domain.entities import InitialDatum, ReflectionData
from ..domain.services import (
    assemble_reflection,
    born_reflection,
    clustered_k_grid,
    reflection_values,
)
from ..ports import ArtifactWriterPort, LoggingPort, TaskExecutorPort

REFLECTION_TABLE = "reflection.csv"
REFLECTION_HEADER = "reflection.json"


def complex_pair(z: complex) -> list[float]:
    """[re, im] for JSON output."""
    z = complex(z)
    return [z.real, z.imag]


@dataclass(frozen=True)
class ComputeReflectionResult:
    """Result of the compute reflection use case.

    Attributes:
        data: Reflection data on the k-grid.
        born_relative_error: max |r - r_Born| / max |r_Born|, None for a zero datum.
        symmetry_ok: Symmetry residual within 1e-10.
        artifacts: Paths of the written files.
    """

    data: ReflectionData
    born_relative_error: float | None
    symmetry_ok: bool
    artifacts: tuple[str, ...] = ()

    @property
    def r0(self) -> complex:
        """r(0)."""
        return self.data.r0

    @property
    def r0_prime(self) -> float:
        """r'(0)."""
        return self.data.r0_prime


class ComputeReflectionUseCase:
    """Use case for the direct scattering transform.

    This use case:
    1. Splits the k-grid into chunks and integrates them in parallel
    2. Validates symmetry and |r| < 1, derives the data at k = 0
    3. Compares with the Born approximation
    4. Writes the reflection table and its JSON header
    """

    def __init__(
        self,
        executor: TaskExecutorPort,
        artifacts: ArtifactWriterPort,
        logger: LoggingPort,
    ) -> None:
        """Initialize the use case with required dependencies.

        Args:
            executor: Parallel map over k-chunks.
            artifacts: Writer for the reflection table.
            logger: Logging port for structured logging.
        """
        self._executor = executor
        self._artifacts = artifacts
        self._logger = logger

    def _values(self, datum: InitialDatum, k: np.ndarray, potential_sign: int) -> np.ndarray:
        chunks = np.array_split(k, min(k.size, max(1, 2 * self._executor.workers)))
        parts = self._executor.map(
            lambda chunk: reflection_values(datum, chunk, potential_sign), chunks
        )
        return np.concatenate(parts)

    def execute(
        self,
        datum: InitialDatum,
        k_grid: np.ndarray | None = None,
        potential_sign: int = 1,
        write_artifacts: bool = True,
    ) -> ComputeReflectionResult:
        """Execute the compute reflection use case.

        Args:
            datum: Initial datum u0.
            k_grid: Symmetric grid; the clustered default if None.
            potential_sign: +1 for q = i u0, -1 for q = -i u0.
            write_artifacts: Whether to write reflection.csv / reflection.json.

        Returns:
            ComputeReflectionResult with the reflection data and checks.

        Raises:
            SolverError: If the scattering integration fails.
            ConventionError: If symmetry or the structure at k = 0 fails.
        """
        k = clustered_k_grid() if k_grid is None else np.asarray(k_grid, dtype=float)
        self._logger.info(
            "Computing reflection coefficient",
            datum=datum.name,
            mass=datum.mass,
            k_points=k.size,
            potential_sign=potential_sign,
        )

        data = assemble_reflection(k, self._values(datum, k, potential_sign))
        symmetry_ok = data.symmetry_residual <= SYMMETRY_TOLERANCE
        if not symmetry_ok:
            self._logger.warning(
                "Symmetry residual above target",
                residual=data.symmetry_residual,
                target=SYMMETRY_TOLERANCE,
            )

        born_error: float | None = None
        if not datum.is_zero():
            born = born_reflection(datum, k, potential_sign)
            scale = float(np.max(np.abs(born)))
            if scale > 0:
                born_error = float(np.max(np.abs(data.r_values - born))) / scale

        self._logger.info(
            "Reflection computed",
            r0=data.r0,
            r0_prime=data.r0_prime,
            r0_second=data.r0_second,
            sup_abs=data.sup_abs,
            symmetry_residual=data.symmetry_residual,
            born_relative_error=born_error,
        )

        paths: tuple[str, ...] = ()
        if write_artifacts:
            paths = (
                self._artifacts.write_table(
                    REFLECTION_TABLE,
                    {
                        "k": data.k_grid,
                        "re_r": data.r_values.real,
                        "im_r": data.r_values.imag,
                    },
                ),
                self._artifacts.write_json(
                    REFLECTION_HEADER,
                    {
                        "datum": datum.name,
                        "mass": datum.mass,
                        "potential_sign": potential_sign,
                        "r0": complex_pair(data.r0),
                        "r0_prime": data.r0_prime,
                        "r0_second": complex_pair(data.r0_second),
                        "sup_abs": data.sup_abs,
                        "symmetry_residual": data.symmetry_residual,
                        "born_relative_error": born_error,
                    },
                ),
            )

        return ComputeReflectionResult(
            data=data,
            born_relative_error=born_error,
            symmetry_ok=symmetry_ok,
            artifacts=paths,
        )
