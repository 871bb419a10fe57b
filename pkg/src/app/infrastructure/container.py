"""Dependency Container.

Builds adapters and use cases for one CLI invocation, so that the command
handlers stay free of wiring.
"""

import logging
from pathlib import Path

from src.app.adapters.outbound.artifacts import CsvDatumReader, FileArtifactWriter
from src.app.adapters.outbound.tasks import ThreadPoolTaskExecutor
from src.app.core.usecases import (
    CheckModelCoefficientsUseCase,
    ComputeReflectionUseCase,
    EvolveMKdVUseCase,
    RunExperimentUseCase,
    SolvePainleveUseCase,
    TabulateCoefficientsUseCase,
)
from src.app.infrastructure.logging.logger_adapter import StandardLoggingAdapter
from src.app.infrastructure.settings.runtime_settings import AppSettings, get_settings


class Container:
    """Dependency container for CLI commands.

    Example:
        >>> container = Container(out_dir="runs/sech", threads=4)
        >>> result = container.run_experiment().execute(config, datum)
    """

    def __init__(
        self,
        out_dir: str | Path | None = None,
        threads: int | None = None,
        settings: AppSettings | None = None,
        command: str = "psv",
    ) -> None:
        """Initialize the container.

        Args:
            out_dir: Artifact directory; settings default if None.
            threads: Worker threads; settings default if None.
            settings: Settings override, mainly for tests.
            command: Subcommand name bound into every log record.
        """
        self._settings = settings or get_settings()
        self._out_dir = Path(out_dir or self._settings.out_dir)
        self._threads = threads or self._settings.threads
        self._logger = StandardLoggingAdapter(
            logging.getLogger("src.app.usecases"), command=command
        )
        self._writer = FileArtifactWriter(self._out_dir)
        self._executor = ThreadPoolTaskExecutor(self._threads)
        self._reader = CsvDatumReader()

    @property
    def settings(self) -> AppSettings:
        """Effective settings."""
        return self._settings

    @property
    def artifacts(self) -> FileArtifactWriter:
        """Artifact writer."""
        return self._writer

    @property
    def datum_reader(self) -> CsvDatumReader:
        """CSV datum reader."""
        return self._reader

    def compute_reflection(self) -> ComputeReflectionUseCase:
        """Scattering use case."""
        return ComputeReflectionUseCase(self._executor, self._writer, self._logger)

    def evolve_mkdv(self) -> EvolveMKdVUseCase:
        """PDE evolution use case."""
        return EvolveMKdVUseCase(self._writer, self._logger)

    def solve_painleve(self) -> SolvePainleveUseCase:
        """Painlevé tabulation use case."""
        return SolvePainleveUseCase(self._writer, self._logger)

    def tabulate_coefficients(self) -> TabulateCoefficientsUseCase:
        """Coefficient table use case."""
        return TabulateCoefficientsUseCase(self._writer, self._logger)

    def check_model_coefficients(self) -> CheckModelCoefficientsUseCase:
        """Model-problem check use case."""
        return CheckModelCoefficientsUseCase(self._executor, self._writer, self._logger)

    def run_experiment(self) -> RunExperimentUseCase:
        """End-to-end verification use case."""
        return RunExperimentUseCase(self._executor, self._writer, self._logger)
