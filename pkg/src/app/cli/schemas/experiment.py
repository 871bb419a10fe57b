"""Experiment configuration schema."""

from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from src.app.core.domain.config import DEFAULT_SECTOR_WIDTH, DEFAULT_TIMES, DEFAULT_Y_POINTS
from src.app.core.domain.entities import ExperimentConfig
from src.app.core.domain.errors import UsageError
from src.app.infrastructure.settings import AppSettings


class ExperimentConfigSchema(BaseModel):
    """JSON experiment description accepted by --config.

    Solver and profile fields left out fall back to the runtime settings.
    """

    model_config = {
        "extra": "forbid",
        "json_schema_extra": {
            "examples": [
                {
                    "family": "zero-mass",
                    "family_params": {"epsilon": 0.05},
                    "sector_width": 2.0,
                    "times": [20, 40, 80, 160],
                    "order": 2,
                }
            ]
        },
    }

    family: str = Field(description="Built-in family name or 'custom-csv'")
    family_params: dict[str, Any] = Field(default_factory=dict)
    datum_path: str | None = Field(
        default=None, description="CSV file with columns x, u0 for 'custom-csv'"
    )
    sector_width: float = Field(default=DEFAULT_SECTOR_WIDTH, description="Sector width M")
    times: list[float] = Field(default_factory=lambda: list(DEFAULT_TIMES))
    order: int = Field(default=1, description="Truncation order N")
    half_period: float | None = Field(default=None, gt=0)
    modes: int | None = Field(default=None)
    dt: float | None = Field(default=None, gt=0)
    tolerance_profile: str | None = Field(default=None)
    y_points: int = Field(default=DEFAULT_Y_POINTS)

    @classmethod
    def from_file(cls, path: str | Path) -> "ExperimentConfigSchema":
        """Load and validate a JSON config file.

        Raises:
            UsageError: If the file is missing or invalid.
        """
        source = Path(path)
        if not source.is_file():
            raise UsageError(str(path), "Config file not found")
        try:
            return cls.model_validate_json(source.read_text(encoding="utf-8"))
        except ValidationError as exc:
            raise UsageError(str(path), f"Invalid config: {exc}") from exc

    def to_domain(
        self, settings: AppSettings, tolerance_profile: str | None = None
    ) -> ExperimentConfig:
        """Convert to the validated domain entity.

        Args:
            settings: Source of solver and profile defaults.
            tolerance_profile: Command-line override of the profile.
        """
        return ExperimentConfig(
            family=self.family,
            family_params=dict(self.family_params),
            sector_width=self.sector_width,
            times=tuple(float(t) for t in self.times),
            order=self.order,
            half_period=self.half_period or settings.solver.half_period,
            modes=self.modes or settings.solver.modes,
            dt=self.dt or settings.solver.dt,
            tolerance_profile=tolerance_profile
            or self.tolerance_profile
            or settings.tolerance_profile,
            y_points=self.y_points,
        )
