"""Tests for the asymptotic coefficient service."""

import numpy as np
import pytest
from scipy.special import airy

from src.app.core.domain.config import HIERARCHY_RESIDUAL_TOLERANCE
from src.app.core.domain.entities import AsymptoticSeries
from src.app.core.domain.errors import (
    DifferentiationError,
    DomainRangeError,
    UnsupportedOrderError,
)
from src.app.core.domain.services import (
    coefficient_functions,
    coefficient_table,
    hierarchy_residual,
    painleve2_solve,
    series_eval,
    series_on_grid,
    u1_eval,
    u2_eval,
    u3_eval,
)
from src.app.core.domain.value_objects import ScatteringParameters, SimilarityPoint

CBRT3 = 3.0 ** (1.0 / 3.0)
Y_GRID = np.linspace(-4.0, 4.0, 161)


@pytest.fixture
def zero_s_series() -> AsymptoticSeries:
    """Order-3 series for s = 0, r'(0) = 0.4, r''(0) = 0.2i."""
    params = ScatteringParameters(s=0j, r0_prime=0.4, r0_second=0.2j)
    return AsymptoticSeries(order=3, parameters=params)


class TestCoefficients:
    """Tests for u1, u2, u3."""

    def test_u1_vanishes_without_table(self) -> None:
        """u1 = 0 when s = 0."""
        assert np.all(u1_eval(Y_GRID, None) == 0.0)

    def test_u1_scales_painleve(self) -> None:
        """u1 = 3^{-1/3} u_P."""
        table = painleve2_solve(-0.3j, node_count=128)
        y = np.array([-1.0, 0.5])
        np.testing.assert_allclose(u1_eval(y, table), table.evaluate(y) / CBRT3)

    def test_u2_formula(self) -> None:
        """u2 = r'(0) / (2 3^{2/3}) Ai'(y)."""
        expected = 0.4 / (2.0 * CBRT3**2) * airy(1.0)[1]
        assert float(u2_eval(1.0, 0.4)) == pytest.approx(expected)

    def test_u3_formula(self) -> None:
        """u3 = -i r''(0) / 24 y Ai(y)."""
        expected = 0.2 / 24.0 * 1.5 * airy(1.5)[0]
        assert float(u3_eval(1.5, 0.2j)) == pytest.approx(expected)

    def test_u3_rejects_real_second_derivative(self) -> None:
        """r''(0) must be imaginary."""
        with pytest.raises(DomainRangeError):
            u3_eval(0.0, 0.2 + 0.1j)

    def test_available_functions(self, zero_s_series: AsymptoticSeries) -> None:
        """All three orders exist for s = 0."""
        assert sorted(coefficient_functions(zero_s_series)) == [1, 2, 3]


class TestSeriesEvaluation:
    """Tests for the truncated sums."""

    def test_sum_of_orders(self, zero_s_series: AsymptoticSeries) -> None:
        """u2 t^{-2/3} + u3 t^{-1} at order 3."""
        y, t = np.array([0.3]), 27.0
        expected = u2_eval(y, 0.4) / 9.0 + u3_eval(y, 0.2j) / 27.0
        np.testing.assert_allclose(series_on_grid(y, t, zero_s_series), expected)

    def test_point_evaluation(self, zero_s_series: AsymptoticSeries) -> None:
        """series_eval maps (x, t) to y first."""
        point = SimilarityPoint.from_y(0.3, 27.0)
        grid_value = series_on_grid(np.array([0.3]), 27.0, zero_s_series)[0]
        assert series_eval(point, zero_s_series) == pytest.approx(grid_value)

    def test_rejects_early_time(self, zero_s_series: AsymptoticSeries) -> None:
        """t < 1 is outside the asymptotic regime."""
        with pytest.raises(DomainRangeError):
            series_on_grid(Y_GRID, 0.5, zero_s_series)

    def test_coefficient_table_columns(self, zero_s_series: AsymptoticSeries) -> None:
        """Columns y, u1, u2, u3."""
        table = coefficient_table(Y_GRID, zero_s_series)
        assert list(table) == ["y", "u1", "u2", "u3"]
        assert np.all(table["u1"] == 0.0)


class TestHierarchyResidual:
    """Tests for the ODE hierarchy checks."""

    @pytest.mark.parametrize("order", [2, 3])
    def test_linear_orders_for_zero_s(
        self, zero_s_series: AsymptoticSeries, order: int
    ) -> None:
        """Ai' and y Ai solve the linear hierarchy equations."""
        residual = hierarchy_residual(order, coefficient_functions(zero_s_series), Y_GRID)
        assert np.max(np.abs(residual)) <= HIERARCHY_RESIDUAL_TOLERANCE

    def test_painleve_order(self) -> None:
        """3^{-1/3} u_P solves the first hierarchy equation."""
        params = ScatteringParameters(s=-0.4j, r0_prime=0.1, r0_second=0j)
        series = AsymptoticSeries(order=1, parameters=params, painleve=painleve2_solve(-0.4j))
        residual = hierarchy_residual(1, coefficient_functions(series), Y_GRID)
        assert np.max(np.abs(residual)) <= HIERARCHY_RESIDUAL_TOLERANCE

    def test_fourth_order_homogeneous(self) -> None:
        """Ai''' = Ai + y Ai' solves the j = 4 equation when lower orders vanish."""

        def u4(y: np.ndarray) -> np.ndarray:
            ai, aip, _, _ = airy(y)
            return np.asarray(ai + y * aip)

        residual = hierarchy_residual(4, {4: u4}, Y_GRID)
        assert np.max(np.abs(residual)) <= HIERARCHY_RESIDUAL_TOLERANCE

    def test_fourth_order_forcing(self) -> None:
        """With u2 = a Ai' the j = 4 residual is -2 3^{2/3} (u2^3)'."""
        a = 0.3

        def u2(y: np.ndarray) -> np.ndarray:
            return a * np.asarray(airy(y)[1])

        def u4(y: np.ndarray) -> np.ndarray:
            ai, aip, _, _ = airy(y)
            return np.asarray(ai + y * aip)

        residual = hierarchy_residual(4, {2: u2, 4: u4}, Y_GRID)
        ai, aip, _, _ = airy(Y_GRID)
        forcing = 2.0 * CBRT3**2 * a**3 * 3.0 * aip**2 * Y_GRID * ai
        np.testing.assert_allclose(residual, -forcing, atol=HIERARCHY_RESIDUAL_TOLERANCE)

    def test_wrong_function_has_large_residual(self) -> None:
        """A function outside the hierarchy is detected."""
        residual = hierarchy_residual(2, {2: lambda y: np.asarray(airy(y)[0])}, Y_GRID)
        assert np.max(np.abs(residual)) > 1e-2

    def test_rejects_order(self) -> None:
        """Only j = 1..4 exist."""
        with pytest.raises(UnsupportedOrderError):
            hierarchy_residual(5, {}, Y_GRID)

    def test_rejects_degenerate_grid(self) -> None:
        """A single-point grid cannot be differentiated."""
        with pytest.raises(DifferentiationError):
            hierarchy_residual(2, {}, np.array([1.0, 1.0]))

    def test_table_too_short(self) -> None:
        """A Painlevé table not covering the widened interval is reported."""
        table = painleve2_solve(-0.4j, y_min=-4.0, node_count=128)
        with pytest.raises(DifferentiationError):
            hierarchy_residual(1, {1: lambda y: u1_eval(y, table)}, Y_GRID)
