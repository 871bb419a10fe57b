"""Tests for RunExperimentUseCase and its error bookkeeping."""

import numpy as np
import pytest

import src.app.core.usecases.run_experiment as run_experiment_module
from src.app.core.domain.entities import ErrorSample, ExperimentConfig, InitialDatum
from src.app.core.domain.errors import UnsupportedOrderError
from src.app.core.domain.value_objects import ConventionChoice, ScatteringParameters
from src.app.core.usecases import RunExperimentUseCase
from src.app.core.usecases.probe_conventions import ProbeConventionsResult
from src.app.core.usecases.run_experiment import (
    region_errors,
    remainder_exponent,
    sector_errors,
)
from tests.conftest import FakeArtifactWriter, FakeLoggingPort, InlineTaskExecutor

TIMES = [20.0, 40.0, 80.0, 160.0]


@pytest.fixture
def use_case(
    inline_executor: InlineTaskExecutor,
    fake_artifacts: FakeArtifactWriter,
    fake_logger: FakeLoggingPort,
) -> RunExperimentUseCase:
    """Create use case with fake dependencies."""
    return RunExperimentUseCase(
        executor=inline_executor, artifacts=fake_artifacts, logger=fake_logger
    )


class TestSectorErrors:
    """Tests for the sup-error split."""

    def test_halves(self) -> None:
        """y = 0 belongs to both halves."""
        y = np.array([-1.0, -0.5, 0.0, 0.5, 1.0])
        diff = np.array([0.1, 0.4, 0.2, 0.3, 0.05])
        sample = sector_errors(8.0, diff, y)
        assert sample == ErrorSample(
            t=8.0, sup_error=0.4, sup_error_left=0.4, sup_error_right=0.3
        )

    def test_region_selection(self) -> None:
        """region_errors reads the requested column."""
        errors = (
            ErrorSample(t=1.0, sup_error=3.0, sup_error_left=1.0, sup_error_right=2.0),
            ErrorSample(t=2.0, sup_error=6.0, sup_error_left=4.0, sup_error_right=5.0),
        )
        assert region_errors(errors, "all") == [3.0, 6.0]
        assert region_errors(errors, "left") == [1.0, 4.0]
        assert region_errors(errors, "right") == [2.0, 5.0]


class TestRemainderExponent:
    """Tests for the parity-aware truncation law."""

    @pytest.mark.parametrize(
        ("order", "parity", "expected"),
        [
            (1, 0, -2.0 / 3.0),
            (1, 1, -1.0),
            (1, -1, -2.0 / 3.0),
            (2, 1, -1.0),
            (2, -1, -4.0 / 3.0),
            (3, -1, -4.0 / 3.0),
            (3, 1, -5.0 / 3.0),
            (2, 0, -1.0),
        ],
    )
    def test_shift_only_when_parity_cancels(
        self, order: int, parity: int, expected: float
    ) -> None:
        """Even data at odd N and odd data at even N decay one third faster."""
        assert remainder_exponent(order, parity) == pytest.approx(expected)

    def test_family_parities(
        self, sech_datum: InitialDatum, zero_mass_datum: InitialDatum
    ) -> None:
        """sech is even and its derivative is odd."""
        assert sech_datum.parity() == 1
        assert zero_mass_datum.parity() == -1


class TestSlopeFitting:
    """Tests for the per-region decay fits."""

    def test_expected_decay_passes(self, use_case: RunExperimentUseCase) -> None:
        """E = t^{-2/3} matches the order-1 exponent."""
        errs = [t ** (-2.0 / 3.0) for t in TIMES]
        fit = use_case._fit("all", TIMES, errs, expected=-2.0 / 3.0, tolerance=0.15)
        assert fit.slope == pytest.approx(-2.0 / 3.0)
        assert fit.passed
        assert not fit.parity_shifted

    def test_much_faster_decay_fails(self, use_case: RunExperimentUseCase) -> None:
        """t^{-3} against the t^{-1} law is outside the two-sided band."""
        errs = [t**-3.0 for t in TIMES]
        fit = use_case._fit("all", TIMES, errs, expected=-1.0, tolerance=0.15)
        assert fit.slope == pytest.approx(-3.0)
        assert not fit.passed

    def test_faster_decay_fails(self, use_case: RunExperimentUseCase) -> None:
        """A slope just below expected - tolerance fails."""
        errs = [t**-1.5 for t in TIMES]
        fit = use_case._fit("left", TIMES, errs, expected=-2.0 / 3.0, tolerance=0.15)
        assert not fit.passed

    def test_parity_shifted_law(self, use_case: RunExperimentUseCase) -> None:
        """A shifted expectation is held two-sided and keeps the nominal exponent."""
        errs = [t ** (-4.0 / 3.0) for t in TIMES]
        fit = use_case._fit(
            "all", TIMES, errs, expected=-4.0 / 3.0, tolerance=0.15, nominal=-1.0
        )
        assert fit.passed
        assert fit.parity_shifted
        assert fit.nominal == -1.0

    def test_slow_decay_fails(self, use_case: RunExperimentUseCase) -> None:
        """A slope above expected + tolerance fails."""
        errs = [t**-0.2 for t in TIMES]
        fit = use_case._fit("right", TIMES, errs, expected=-2.0 / 3.0, tolerance=0.15)
        assert not fit.passed

    def test_few_samples(self, use_case: RunExperimentUseCase) -> None:
        """Fewer than four samples report no slope and pass."""
        fit = use_case._fit("all", TIMES[:3], [1.0, 0.5, 0.25], expected=-1.0, tolerance=0.15)
        assert fit.slope is None
        assert fit.passed

    def test_identically_zero_errors(self, use_case: RunExperimentUseCase) -> None:
        """An exact zero error sequence passes without a slope."""
        fit = use_case._fit("all", TIMES, [0.0] * 4, expected=-1.0, tolerance=0.15)
        assert fit.slope is None
        assert fit.passed

    def test_partial_zero_errors(
        self, use_case: RunExperimentUseCase, fake_logger: FakeLoggingPort
    ) -> None:
        """A single zero makes the log fit degenerate and fails the region."""
        fit = use_case._fit("right", TIMES, [1.0, 0.5, 0.0, 0.1], expected=-1.0, tolerance=0.15)
        assert fit.slope is None
        assert not fit.passed
        assert fake_logger.messages("warning") == ["Slope fit failed"]


class TestRunExperimentUseCase:
    """End-to-end runs on cheap data."""

    def test_zero_datum(
        self,
        use_case: RunExperimentUseCase,
        zero_datum: InitialDatum,
        fake_artifacts: FakeArtifactWriter,
        fake_logger: FakeLoggingPort,
    ) -> None:
        """The zero datum gives zero errors, the default convention and a pass."""
        config = ExperimentConfig(
            family="zero", times=(1.0, 2.0, 4.0, 8.0), order=3,
            half_period=40.0, modes=256, dt=0.05, y_points=21,
        )
        result = use_case.execute(config, zero_datum)

        report = result.report
        assert result.passed
        assert all(e.sup_error == 0.0 for e in report.errors)
        assert all(fit.slope is None for fit in report.slopes)
        assert report.chosen_convention.is_default()
        assert report.leading_ratio is None
        assert {"reflection.csv", "errors.csv"} <= set(fake_artifacts.tables)
        assert list(fake_artifacts.tables["errors.csv"]["t"]) == [1.0, 2.0, 4.0, 8.0]
        assert fake_logger.messages("info")[-1] == "Experiment finished"

    def test_rejects_higher_order_for_nonzero_s(
        self, use_case: RunExperimentUseCase, sech_datum: InitialDatum
    ) -> None:
        """A positive-mass datum has s != 0, so N = 2 is refused before the PDE run."""
        config = ExperimentConfig(family="sech", order=2, half_period=40.0, modes=256)
        with pytest.raises(UnsupportedOrderError):
            use_case.execute(config, sech_datum)

    def test_applies_chosen_convention(
        self,
        use_case: RunExperimentUseCase,
        zero_datum: InitialDatum,
        fake_logger: FakeLoggingPort,
        monkeypatch: pytest.MonkeyPatch,
    ) -> None:
        """A flipped convention ranking rebuilds the tested series from that convention."""
        flipped = ConventionChoice("r0", -1, error=0.0)
        applied: list[ConventionChoice] = []

        def fake_ranking(*_: object) -> ProbeConventionsResult:
            return ProbeConventionsResult(candidates=(flipped,), chosen=flipped, t=1.0)

        def fake_parameters(_: object, choice: ConventionChoice) -> ScatteringParameters:
            applied.append(choice)
            return ScatteringParameters(s=0j, r0_prime=0.3, r0_second=0j)

        monkeypatch.setattr(use_case._probe_uc, "execute", fake_ranking)
        monkeypatch.setattr(run_experiment_module, "candidate_parameters", fake_parameters)
        config = ExperimentConfig(
            family="zero", times=(1.0, 2.0, 4.0, 8.0), order=2,
            half_period=40.0, modes=256, dt=0.05, y_points=21,
        )
        result = use_case.execute(config, zero_datum)

        assert applied == [flipped]
        assert result.series.parameters.r0_prime == 0.3
        assert result.report.chosen_convention == flipped
        assert "Applying non-default convention" in fake_logger.messages("warning")
        assert result.report.errors[0].sup_error > 0.0
