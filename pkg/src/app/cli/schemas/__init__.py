"""CLI request and report schemas."""

from src.app.cli.schemas.common import ComplexValue, ErrorResponse
from src.app.cli.schemas.experiment import ExperimentConfigSchema
from src.app.cli.schemas.report import (
    EnvironmentManifest,
    RunManifestSchema,
    VerificationReportSchema,
)

__all__ = [
    "ComplexValue",
    "ErrorResponse",
    "ExperimentConfigSchema",
    "EnvironmentManifest",
    "RunManifestSchema",
    "VerificationReportSchema",
]
