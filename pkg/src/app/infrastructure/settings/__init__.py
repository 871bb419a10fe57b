"""Settings Infrastructure Package.

Provides application configuration management.
"""

from src.app.infrastructure.settings.runtime_settings import (
    AppSettings,
    QuadratureSettings,
    SolverSettings,
    get_settings,
)

__all__ = [
    "AppSettings",
    "QuadratureSettings",
    "SolverSettings",
    "get_settings",
]
