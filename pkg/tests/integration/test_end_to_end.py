"""End-to-end verification runs on the production grids.

These take minutes; run them with ``pytest -m integration``.
"""

import json
import logging
from pathlib import Path

import numpy as np
import pytest

from src.app.adapters.outbound.artifacts import FileArtifactWriter
from src.app.adapters.outbound.tasks import ThreadPoolTaskExecutor
from src.app.cli import main
from src.app.core.domain.entities import ExperimentConfig, SlopeFit
from src.app.core.domain.services import (
    SolverGrid,
    born_reflection,
    builtin_family,
    evolve,
    fit_slope,
    linear_evolve,
    reflection_values,
)
from src.app.core.usecases import RunExperimentUseCase
from src.app.core.usecases.run_experiment import remainder_exponent
from src.app.infrastructure.logging import StandardLoggingAdapter

pytestmark = [pytest.mark.integration, pytest.mark.slow]

SLOPE_TOLERANCE = 0.15


@pytest.fixture
def use_case(tmp_path: Path) -> RunExperimentUseCase:
    """Use case wired to real adapters."""
    return RunExperimentUseCase(
        executor=ThreadPoolTaskExecutor(workers=4),
        artifacts=FileArtifactWriter(tmp_path),
        logger=StandardLoggingAdapter(logging.getLogger("psv.integration")),
    )


def _assert_slopes(report_slopes: tuple[SlopeFit, ...], expected: float) -> None:
    for fit in report_slopes:
        assert fit.slope is not None, fit.region
        assert fit.expected == pytest.approx(expected), fit.region
        assert fit.slope == pytest.approx(expected, abs=SLOPE_TOLERANCE), fit.region
        assert fit.passed, fit.region


class TestZeroMassData:
    """Sector asymptotics of zero-mass data, where s = 0."""

    @pytest.mark.parametrize(
        ("family", "params", "order", "expected"),
        [
            ("zero-mass", {"epsilon": 0.05}, 2, -4.0 / 3.0),
            ("zero-mass", {"epsilon": 0.05}, 3, -4.0 / 3.0),
            ("zero-mass-even", {"epsilon": 0.05, "width": 2.0}, 2, -1.0),
        ],
    )
    def test_decay_law(
        self,
        use_case: RunExperimentUseCase,
        family: str,
        params: dict[str, float],
        order: int,
        expected: float,
    ) -> None:
        """E_N follows the parity-aware law on both halves of the sector.

        The odd datum sech' cancels the t^{-1} remainder at N = 2, so its
        E_2 decays like t^{-4/3}; the even datum sech'' keeps t^{-1}.
        """
        config = ExperimentConfig(family=family, family_params=params, order=order)
        datum = builtin_family(config.family, config.family_params)
        assert remainder_exponent(order, datum.parity()) == pytest.approx(expected)

        result = use_case.execute(config, datum)

        report = result.report
        assert result.passed
        assert not report.convention_flipped
        assert report.health.max_mass_drift <= 1e-8
        assert report.health.max_l2_drift <= 1e-8
        assert report.health.max_tail_fraction <= 1e-10
        assert abs(report.scattering.r0) <= 1e-10
        _assert_slopes(report.slopes, expected)


class TestPositiveMassData:
    """Painlevé leading order for sech data, where s != 0."""

    def test_leading_order(self, use_case: RunExperimentUseCase) -> None:
        """E_1 of the even sech datum decays like t^{-1}; u_pde / (u1 t^{-1/3}) is near 1."""
        config = ExperimentConfig(family="sech", family_params={"epsilon": 0.05}, order=1)
        datum = builtin_family(config.family, config.family_params)

        result = use_case.execute(config, datum)

        report = result.report
        assert result.passed
        assert not report.convention_flipped
        assert report.health.max_tail_fraction <= 1e-10
        _assert_slopes(report.slopes, -1.0)
        assert all(fit.parity_shifted for fit in report.slopes)
        assert report.leading_ratio is not None
        assert report.leading_ratio == pytest.approx(1.0, abs=0.1)


class TestOracles:
    """Scaling checks of the scattering and PDE oracles."""

    def test_born_error_is_quadratic(self) -> None:
        """The first-order Born error scales like eps^2."""
        k = np.linspace(-4.0, 4.0, 161)
        epsilons = [1e-2, 5e-3, 2.5e-3, 1.25e-3]
        errors = []
        for eps in epsilons:
            datum = builtin_family("sech", {"epsilon": eps})
            errors.append(
                float(np.max(np.abs(reflection_values(datum, k) - born_reflection(datum, k))))
            )
        slope, _ = fit_slope(epsilons, errors)
        assert slope == pytest.approx(2.0, abs=0.1)

    def test_nonlinear_correction_is_quadratic(self) -> None:
        """The relative distance to the Airy propagator drops fourfold when eps halves."""
        grid = SolverGrid.for_horizon(builtin_family("sech", {"epsilon": 0.04}), 10.0)
        relative = []
        for eps in (0.04, 0.02):
            datum = builtin_family("sech", {"epsilon": eps})
            (snapshot,) = evolve(datum, [10.0], grid, dt=0.01)
            linear = linear_evolve(datum, 10.0, grid)
            relative.append(
                float(np.max(np.abs(snapshot.state.u - linear.u)) / np.max(np.abs(linear.u)))
            )
        assert relative[0] / relative[1] == pytest.approx(4.0, abs=0.5)


class TestCommandLine:
    """verify through main with a JSON config."""

    def test_verify_from_config(self, tmp_path: Path) -> None:
        """The config file drives the run and report.json records the flags."""
        config = tmp_path / "exp.json"
        config.write_text(
            json.dumps(
                {
                    "family": "zero-mass",
                    "family_params": {"epsilon": 0.05},
                    "sector_width": 2.0,
                    "times": [20, 40, 80, 160],
                    "order": 2,
                }
            )
        )
        out = tmp_path / "run"

        code = main(["--config", str(config), "--out", str(out), "--threads", "4", "verify"])

        assert code == 0
        report = json.loads((out / "report.json").read_text())
        assert report["passed"] is True
        assert report["expected_slope"] == pytest.approx(-4.0 / 3.0)
        assert all(fit["parity_shifted"] for fit in report["slopes"])
        assert {"errors.csv", "reflection.csv", "manifest.json"} <= {
            p.name for p in out.iterdir()
        }
