"""Tests for the power-law fitting service."""

import numpy as np
import pytest

from src.app.core.domain.errors import DegenerateFitError
from src.app.core.domain.services import fit_slope, refinement_ratio

TIMES = [20.0, 40.0, 80.0, 160.0]


class TestFitSlope:
    """Tests for fit_slope."""

    def test_exact_power_law(self) -> None:
        """E = 3 t^{-2/3} gives slope -2/3 with zero stderr."""
        errs = [3.0 * t ** (-2.0 / 3.0) for t in TIMES]
        slope, stderr = fit_slope(TIMES, errs)
        assert slope == pytest.approx(-2.0 / 3.0, abs=1e-12)
        assert stderr == pytest.approx(0.0, abs=1e-12)

    def test_noisy_power_law(self) -> None:
        """Multiplicative noise leaves the slope close and stderr positive."""
        noise = np.array([1.02, 0.97, 1.01, 0.99])
        errs = [e * t**-1.0 for e, t in zip(noise, TIMES)]
        slope, stderr = fit_slope(TIMES, errs)
        assert slope == pytest.approx(-1.0, abs=0.05)
        assert stderr > 0.0

    def test_too_few_samples(self) -> None:
        """Three samples are not enough."""
        with pytest.raises(DegenerateFitError):
            fit_slope(TIMES[:3], [1.0, 0.5, 0.25])

    def test_non_positive_error(self) -> None:
        """log of zero is undefined."""
        with pytest.raises(DegenerateFitError):
            fit_slope(TIMES, [1.0, 0.5, 0.0, 0.1])

    def test_coincident_times(self) -> None:
        """All times equal leaves the slope undetermined."""
        with pytest.raises(DegenerateFitError):
            fit_slope([5.0] * 4, [1.0, 0.5, 0.25, 0.1])


class TestRefinementRatio:
    """Tests for refinement_ratio."""

    def test_fourth_order(self) -> None:
        """Halving the step of an order-4 method divides the error by 16."""
        assert refinement_ratio(1.6e-7, 1e-8) == pytest.approx(16.0)

    def test_zero_fine_error(self) -> None:
        """A vanishing fine error is degenerate."""
        with pytest.raises(DegenerateFitError):
            refinement_ratio(1e-8, 0.0)
