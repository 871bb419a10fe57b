"""Runtime Settings.

Pydantic v2 settings for the command-line tool.
Auto-loads from environment variables and .env files.
"""

from functools import lru_cache
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.app.core.domain.config import QuadratureDefaults, SolverDefaults


class SolverSettings(BaseSettings):
    """Resolution of the pseudospectral reference solver.

    Unset half_period and modes are sized from the sample times and the datum.
    """

    model_config = SettingsConfigDict(
        env_prefix="PSV_SOLVER_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    half_period: float | None = Field(default=None, gt=0)
    modes: int | None = Field(default=None, ge=8)
    dt: float = Field(default=SolverDefaults().dt, gt=0)


class QuadratureSettings(BaseSettings):
    """Ray quadrature layout used by rh-check."""

    model_config = SettingsConfigDict(
        env_prefix="PSV_QUAD_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    radius: float = Field(default=QuadratureDefaults().radius, gt=0)
    nodes_per_panel: int = Field(default=QuadratureDefaults().nodes_per_panel, ge=2)


class AppSettings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_prefix="PSV_APP_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    name: str = Field(default="Painlevé Sector Verification")
    version: str = Field(default="0.1.0")
    log_level: str = Field(default="INFO")
    log_format: Literal["simple", "detailed"] = Field(default="simple")
    out_dir: str = Field(default="runs")
    threads: int = Field(default=1, ge=1)
    tolerance_profile: Literal["default", "strict", "relaxed"] = Field(default="default")

    # Nested settings
    solver: SolverSettings = Field(default_factory=SolverSettings)
    quadrature: QuadratureSettings = Field(default_factory=QuadratureSettings)


@lru_cache
def get_settings() -> AppSettings:
    """Get cached application settings.

    Returns:
        AppSettings instance loaded from environment.
    """
    return AppSettings()
