"""Verification report and run manifest schemas."""

import platform
import sys
from importlib.metadata import PackageNotFoundError, version
from typing import Any

from pydantic import BaseModel, Field

from src.app.cli.schemas.common import ComplexValue
from src.app.core.domain.entities import SlopeFit, VerificationReport
from src.app.core.domain.value_objects import ConventionChoice

MANIFEST_PACKAGES = ("numpy", "scipy", "pandas", "pydantic", "tenacity")


class ErrorSampleSchema(BaseModel):
    """Sup errors at one time."""

    t: float
    sup_error: float
    sup_error_left: float
    sup_error_right: float


class SlopeFitSchema(BaseModel):
    """Fitted decay exponent of one region."""

    region: str
    slope: float | None = Field(description="None with fewer than four samples")
    stderr: float | None
    expected: float
    tolerance: float
    passed: bool = Field(description="|slope - expected| <= tolerance")
    nominal: float = Field(description="-(N+1)/3 before any parity shift")
    parity_shifted: bool

    @classmethod
    def from_domain(cls, fit: SlopeFit) -> "SlopeFitSchema":
        """Convert a domain fit."""
        return cls(
            region=fit.region,
            slope=fit.slope,
            stderr=fit.stderr,
            expected=fit.expected,
            tolerance=fit.tolerance,
            passed=fit.passed,
            nominal=fit.nominal,
            parity_shifted=fit.parity_shifted,
        )


class ConventionSchema(BaseModel):
    """One convention candidate."""

    label: str
    s_convention: str
    potential_sign: int
    error: float | None
    admissible: bool
    reason: str = ""

    @classmethod
    def from_domain(cls, choice: ConventionChoice) -> "ConventionSchema":
        """Convert a domain candidate."""
        return cls(
            label=choice.label,
            s_convention=choice.s_convention,
            potential_sign=choice.potential_sign,
            error=choice.error,
            admissible=choice.admissible,
            reason=choice.reason,
        )


class ScatteringSummarySchema(BaseModel):
    """Scattering numbers of the run."""

    mass: float
    r0: ComplexValue
    r0_prime: float
    r0_second: ComplexValue
    sup_abs: float
    symmetry_residual: float


class SolverHealthSchema(BaseModel):
    """Reference solver diagnostics."""

    max_mass_drift: float
    max_l2_drift: float
    max_tail_fraction: float
    conservation_ok: bool


class VerificationReportSchema(BaseModel):
    """Serialised VerificationReport."""

    family: str
    order: int
    tolerance_profile: str
    expected_slope: float
    errors: list[ErrorSampleSchema]
    slopes: list[SlopeFitSchema]
    scattering: ScatteringSummarySchema
    health: SolverHealthSchema
    conventions: list[ConventionSchema]
    chosen_convention: ConventionSchema
    convention_flipped: bool
    leading_ratio: float | None
    pass_flags: dict[str, bool]
    passed: bool

    @classmethod
    def from_domain(cls, report: VerificationReport) -> "VerificationReportSchema":
        """Convert the domain report."""
        scattering = report.scattering
        health = report.health
        return cls(
            family=report.family,
            order=report.order,
            tolerance_profile=report.tolerance_profile,
            expected_slope=(
                report.slopes[0].expected if report.slopes else -(report.order + 1) / 3.0
            ),
            errors=[
                ErrorSampleSchema(
                    t=e.t,
                    sup_error=e.sup_error,
                    sup_error_left=e.sup_error_left,
                    sup_error_right=e.sup_error_right,
                )
                for e in report.errors
            ],
            slopes=[SlopeFitSchema.from_domain(fit) for fit in report.slopes],
            scattering=ScatteringSummarySchema(
                mass=scattering.mass,
                r0=ComplexValue.from_complex(scattering.r0),
                r0_prime=scattering.r0_prime,
                r0_second=ComplexValue.from_complex(scattering.r0_second),
                sup_abs=scattering.sup_abs,
                symmetry_residual=scattering.symmetry_residual,
            ),
            health=SolverHealthSchema(
                max_mass_drift=health.max_mass_drift,
                max_l2_drift=health.max_l2_drift,
                max_tail_fraction=health.max_tail_fraction,
                conservation_ok=health.conservation_ok,
            ),
            conventions=[ConventionSchema.from_domain(c) for c in report.conventions],
            chosen_convention=ConventionSchema.from_domain(report.chosen_convention),
            convention_flipped=report.convention_flipped,
            leading_ratio=report.leading_ratio,
            pass_flags=report.pass_flags(),
            passed=report.passed,
        )


class EnvironmentManifest(BaseModel):
    """Interpreter, platform and library versions; no wall-clock data."""

    python: str
    platform: str
    packages: dict[str, str]

    @classmethod
    def capture(cls) -> "EnvironmentManifest":
        """Describe the running environment."""
        packages: dict[str, str] = {}
        for name in MANIFEST_PACKAGES:
            try:
                packages[name] = version(name)
            except PackageNotFoundError:
                packages[name] = "unknown"
        return cls(
            python=sys.version.split()[0],
            platform=platform.platform(),
            packages=packages,
        )


class RunManifestSchema(BaseModel):
    """manifest.json written by every command."""

    command: str
    arguments: dict[str, Any]
    artifacts: list[str]
    passed: bool
    exit_code: int
    environment: EnvironmentManifest = Field(default_factory=EnvironmentManifest.capture)
