"""Tests for the Airy function service."""

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import airy

from src.app.core.domain.errors import DomainRangeError, NonFiniteInputError
from src.app.core.domain.services import (
    airy_eval,
    airy_prime_square_tail,
    airy_prime_square_tail_exact,
    airy_square_tail,
    airy_triple,
)

AI_ZERO = 0.355028053887817239
AI_PRIME_ZERO = -0.258819403792806798


class TestAiryEval:
    """Tests for airy_eval."""

    def test_values_at_origin(self) -> None:
        """Ai(0) and Ai'(0) against reference constants."""
        assert airy_eval(0.0) == pytest.approx(AI_ZERO, abs=1e-15)
        assert airy_eval(0.0, 1) == pytest.approx(AI_PRIME_ZERO, abs=1e-15)
        assert airy_eval(0.0, 2) == 0.0

    def test_scalar_in_scalar_out(self) -> None:
        """Scalar input returns a Python float."""
        assert isinstance(airy_eval(1.5), float)

    def test_second_derivative_is_y_ai(self) -> None:
        """Ai'' = y Ai on a grid."""
        y = np.linspace(-6.0, 6.0, 25)
        np.testing.assert_allclose(airy_eval(y, 2), y * airy(y)[0], rtol=0, atol=1e-15)

    def test_rejects_nan(self) -> None:
        """NaN arguments are rejected."""
        with pytest.raises(NonFiniteInputError):
            airy_eval(np.array([0.0, np.nan]))

    def test_rejects_order(self) -> None:
        """Only orders 0, 1 and 2 are provided."""
        with pytest.raises(DomainRangeError):
            airy_eval(0.0, 3)

    def test_triple(self) -> None:
        """airy_triple satisfies the Airy equation."""
        triple = airy_triple(-2.5)
        assert triple.ai == pytest.approx(float(airy(-2.5)[0]))
        assert triple.equation_residual() < 1e-15


class TestTailIntegrals:
    """Tests for the tail integrals of Ai^2 and Ai'^2."""

    @pytest.mark.parametrize("y", [-3.0, 0.0, 2.0])
    def test_square_tail(self, y: float) -> None:
        """int_y^inf Ai^2 against adaptive quadrature."""
        reference, _ = quad(lambda s: airy(s)[0] ** 2, y, np.inf, epsabs=1e-14, limit=200)
        assert airy_square_tail(y) == pytest.approx(reference, abs=1e-11)

    @pytest.mark.parametrize("y", [-2.0, 0.0, 1.0, 4.0])
    def test_prime_square_tail_routes_agree(self, y: float) -> None:
        """Quadrature and closed antiderivative agree to 1e-12."""
        assert airy_prime_square_tail(y) == pytest.approx(
            airy_prime_square_tail_exact(y), abs=1e-12
        )

    def test_prime_square_tail_decays(self) -> None:
        """int_y^inf Ai'^2 is negligible far right."""
        assert abs(airy_prime_square_tail(8.0)) < 1e-9
