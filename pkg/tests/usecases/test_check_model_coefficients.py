"""Tests for CheckModelCoefficientsUseCase."""

import pytest

from src.app.core.domain.errors import DomainRangeError
from src.app.core.domain.services import RayContour
from src.app.core.usecases import CheckModelCoefficientsUseCase
from tests.conftest import FakeArtifactWriter, FakeLoggingPort, InlineTaskExecutor

SMALL_GRID = {"y_values": (0.0,), "p1_values": (1.0,), "p2_values": (1j,)}


class TestCheckModelCoefficientsUseCase:
    """Tests for CheckModelCoefficientsUseCase."""

    @pytest.fixture
    def use_case(
        self,
        inline_executor: InlineTaskExecutor,
        fake_artifacts: FakeArtifactWriter,
        fake_logger: FakeLoggingPort,
    ) -> CheckModelCoefficientsUseCase:
        """Create use case with fake dependencies."""
        return CheckModelCoefficientsUseCase(
            executor=inline_executor, artifacts=fake_artifacts, logger=fake_logger
        )

    def test_single_point_passes(
        self, use_case: CheckModelCoefficientsUseCase, fake_logger: FakeLoggingPort
    ) -> None:
        """Closed forms and quadrature agree; structure, decay and F1 hold."""
        result = use_case.execute(**SMALL_GRID)

        assert len(result.comparisons) == 1
        assert result.passed
        assert result.m21_form_discrepancy < 1e-14
        assert fake_logger.messages("info")[-1] == "Model coefficient check finished"

    def test_parameter_product(self, use_case: CheckModelCoefficientsUseCase) -> None:
        """One comparison per (y, p1, p2) combination."""
        result = use_case.execute(
            y_values=(-1.0, 1.0), p1_values=(0.0, 1.0), p2_values=(0j,), write_artifacts=False
        )
        assert len(result.comparisons) == 4
        assert result.max_abs_error <= 1e-8

    def test_writes_rows_per_entry(
        self, use_case: CheckModelCoefficientsUseCase, fake_artifacts: FakeArtifactWriter
    ) -> None:
        """rh_check.csv has one row per coefficient matrix."""
        result = use_case.execute(**SMALL_GRID)

        table = fake_artifacts.tables["rh_check.csv"]
        assert list(table["entry"]) == ["m11", "m12", "m21"]
        assert list(table["p2_im"]) == [1.0, 1.0, 1.0]
        header = fake_artifacts.documents["rh_check.json"]
        assert header["radius"] == 6.0
        assert header["max_abs_error"] == result.max_abs_error

    def test_rejects_short_contour(self, use_case: CheckModelCoefficientsUseCase) -> None:
        """A contour radius below 6 is refused."""
        with pytest.raises(DomainRangeError):
            use_case.execute(contour=RayContour(radius=4.0), **SMALL_GRID)
