"""Verification Report Entity.

Outcome of an end-to-end experiment: sup errors per time, fitted decay
exponents, the convention probe and solver health.
"""

from dataclasses import dataclass, field

from ..value_objects import ConventionChoice


@dataclass(frozen=True)
class ErrorSample:
    """Sup error of the truncated series at one time.

    Attributes:
        t: Sample time.
        sup_error: max over the whole y-grid.
        sup_error_left: max over y <= 0.
        sup_error_right: max over y >= 0.
    """

    t: float
    sup_error: float
    sup_error_left: float
    sup_error_right: float


@dataclass(frozen=True)
class SlopeFit:
    """Least-squares decay exponent of log E against log t.

    Attributes:
        region: 'all', 'left' or 'right'.
        slope: Fitted exponent, None when fewer than four samples exist.
        stderr: Standard error of the exponent.
        expected: Exponent the fit is held to.
        tolerance: Allowed deviation.
        passed: |slope - expected| <= tolerance.
        nominal: -(N+1)/3. Differs from expected when the datum parity
            cancels the leading remainder term.
    """

    region: str
    slope: float | None
    stderr: float | None
    expected: float
    tolerance: float
    passed: bool
    nominal: float

    @property
    def parity_shifted(self) -> bool:
        """Whether the expected exponent was steepened by the datum parity."""
        return self.expected != self.nominal


@dataclass(frozen=True)
class ScatteringSummary:
    """Scattering numbers stamped into the report."""

    mass: float
    r0: complex
    r0_prime: float
    r0_second: complex
    sup_abs: float
    symmetry_residual: float


@dataclass(frozen=True)
class SolverHealth:
    """Reference solver diagnostics over the run.

    Attributes:
        max_mass_drift: Largest relative mass drift.
        max_l2_drift: Largest relative L2 drift.
        max_tail_fraction: Largest edge-band energy share.
        conservation_ok: Drifts within the profile tolerance.
    """

    max_mass_drift: float
    max_l2_drift: float
    max_tail_fraction: float
    conservation_ok: bool


@dataclass(frozen=True)
class VerificationReport:
    """Entity representing the result of run_experiment.

    Attributes:
        family: Datum family.
        order: Truncation order N.
        tolerance_profile: Profile name.
        errors: Per-time sup errors.
        slopes: Fits for 'all', 'left' and 'right'.
        scattering: Scattering summary.
        health: Solver health.
        conventions: All probed convention candidates.
        chosen_convention: Best admissible candidate.
        leading_ratio: u_pde / (u1 t^{-1/3}) at y = 0 and the last time, if s != 0.
        leading_ratio_ok: Whether that ratio lies within tolerance of 1.
    """

    family: str
    order: int
    tolerance_profile: str
    errors: tuple[ErrorSample, ...]
    slopes: tuple[SlopeFit, ...]
    scattering: ScatteringSummary
    health: SolverHealth
    conventions: tuple[ConventionChoice, ...] = ()
    chosen_convention: ConventionChoice = field(default_factory=ConventionChoice.default)
    leading_ratio: float | None = None
    leading_ratio_ok: bool = True

    @property
    def convention_flipped(self) -> bool:
        """Whether the probe preferred a non-default convention."""
        return not self.chosen_convention.is_default()

    def pass_flags(self) -> dict[str, bool]:
        """All boolean verdicts of the run."""
        flags = {f"slope_{fit.region}": fit.passed for fit in self.slopes}
        flags["conservation"] = self.health.conservation_ok
        flags["leading_ratio"] = self.leading_ratio_ok
        return flags

    @property
    def passed(self) -> bool:
        """True if every pass flag holds."""
        return all(self.pass_flags().values())
