"""Tests for domain value objects."""

import numpy as np
import pytest

from src.app.core.domain.errors import (
    ConventionError,
    DomainRangeError,
    NonFiniteInputError,
    UsageError,
)
from src.app.core.domain.value_objects import (
    AiryTriple,
    ConventionChoice,
    ScatteringParameters,
    SimilarityPoint,
    StokesData,
)


class TestAiryTriple:
    """Tests for AiryTriple."""

    def test_derivative_selects_component(self) -> None:
        """derivative(j) returns Ai, Ai' and Ai'' in order."""
        triple = AiryTriple(y=1.0, ai=0.1, ai_prime=-0.2, ai_second=0.1)
        assert triple.derivative(0) == 0.1
        assert triple.derivative(1) == -0.2
        assert triple.derivative(2) == 0.1

    def test_equation_residual(self) -> None:
        """Residual of Ai'' = y Ai."""
        triple = AiryTriple(y=2.0, ai=0.5, ai_prime=0.0, ai_second=1.25)
        assert triple.equation_residual() == pytest.approx(0.25)

    def test_rejects_nan(self) -> None:
        """Non-finite samples are rejected."""
        with pytest.raises(NonFiniteInputError):
            AiryTriple(y=float("nan"), ai=0.0, ai_prime=0.0, ai_second=0.0)


class TestStokesData:
    """Tests for StokesData."""

    def test_ablowitz_segur_family(self) -> None:
        """(s, 0, -s) satisfies the constraint and is of real class."""
        stokes = StokesData.ablowitz_segur(0.4j)
        assert stokes.s == 0.4j
        assert stokes.s3 == -0.4j
        assert stokes.constraint_residual() == 0.0
        assert stokes.is_real_class()

    def test_airy_amplitude_is_i_times_s(self) -> None:
        """alpha = i s is real."""
        assert StokesData.ablowitz_segur(-0.5j).airy_amplitude == pytest.approx(0.5)
        assert StokesData.ablowitz_segur(0.5j).airy_amplitude == pytest.approx(-0.5)

    @pytest.mark.parametrize("s", [1.0j, -1.2j, 0.3 + 0.1j, 0.5])
    def test_ablowitz_segur_rejects_invalid(self, s: complex) -> None:
        """|s| >= 1 or a real part is outside the family."""
        with pytest.raises(DomainRangeError):
            StokesData.ablowitz_segur(s)

    def test_constraint_violation(self) -> None:
        """Arbitrary triples violating the cyclic constraint are rejected."""
        with pytest.raises(DomainRangeError):
            StokesData(s1=0.5j, s2=0j, s3=0.5j)

    def test_general_constraint_accepted(self) -> None:
        """A non-family triple satisfying the constraint is accepted."""
        s1, s3 = 0.5j, 0.25j
        s2 = (s1 + s3) / (1 - s1 * s3)
        stokes = StokesData(s1=s1, s2=s2, s3=s3)
        assert stokes.constraint_residual() < 1e-12
        assert not stokes.is_real_class()

    def test_zero(self) -> None:
        """Zero data."""
        assert StokesData.zero().is_zero()
        assert StokesData.ablowitz_segur(0j).is_zero()


class TestSimilarityPoint:
    """Tests for SimilarityPoint."""

    def test_similarity_variable(self) -> None:
        """y = x (3t)^{-1/3}."""
        point = SimilarityPoint(x=6.0, t=9.0)
        assert point.y == pytest.approx(2.0)

    def test_from_y_round_trip(self) -> None:
        """from_y recovers y."""
        point = SimilarityPoint.from_y(-1.5, 40.0)
        assert point.y == pytest.approx(-1.5)

    def test_rejects_small_time(self) -> None:
        """t < 1 is outside the asymptotic regime."""
        with pytest.raises(DomainRangeError):
            SimilarityPoint(x=0.0, t=0.5)

    def test_in_sector(self) -> None:
        """|x| <= M t^{1/3}."""
        assert SimilarityPoint(x=3.9, t=8.0).in_sector(2.0)
        assert not SimilarityPoint(x=4.1, t=8.0).in_sector(2.0)


class TestScatteringParameters:
    """Tests for ScatteringParameters."""

    def test_model_parameters(self) -> None:
        """p1 = r'(0)/3^{1/3}, p2 = r''(0)/(2 3^{2/3})."""
        params = ScatteringParameters(s=0j, r0_prime=3.0 ** (1 / 3), r0_second=2j * 3.0 ** (2 / 3))
        assert params.p1 == pytest.approx(1.0)
        assert params.p2 == pytest.approx(1j)
        assert params.has_vanishing_s()

    def test_real_s_is_convention_error(self) -> None:
        """r(0) must be purely imaginary."""
        with pytest.raises(ConventionError):
            ScatteringParameters(s=0.1 + 0j, r0_prime=0.0, r0_second=0j)

    def test_real_second_derivative_is_convention_error(self) -> None:
        """r''(0) must be purely imaginary."""
        with pytest.raises(ConventionError):
            ScatteringParameters(s=0j, r0_prime=0.0, r0_second=0.2 + 0j)

    def test_large_s_rejected(self) -> None:
        """|s| < 1."""
        with pytest.raises(DomainRangeError):
            ScatteringParameters(s=1.0j, r0_prime=0.0, r0_second=0j)

    def test_non_finite_rejected(self) -> None:
        """NaN parameters are rejected."""
        with pytest.raises(NonFiniteInputError):
            ScatteringParameters(s=0j, r0_prime=np.nan, r0_second=0j)


class TestConventionChoice:
    """Tests for ConventionChoice."""

    def test_default(self) -> None:
        """The fixed convention is s = r(0) with q = i u."""
        choice = ConventionChoice.default()
        assert choice.is_default()
        assert choice.label == "r0/+"
        assert choice.map_s(-0.2j) == -0.2j

    def test_i_r0_maps_to_real(self) -> None:
        """s = i r(0) turns an imaginary r(0) real."""
        choice = ConventionChoice(s_convention="i_r0", potential_sign=-1)
        assert choice.map_s(-0.2j) == pytest.approx(0.2)
        assert choice.label == "i_r0/-"

    def test_invalid_labels(self) -> None:
        """Unknown convention names and signs are usage errors."""
        with pytest.raises(UsageError):
            ConventionChoice(s_convention="r1", potential_sign=1)  # type: ignore[arg-type]
        with pytest.raises(UsageError):
            ConventionChoice(s_convention="r0", potential_sign=2)
