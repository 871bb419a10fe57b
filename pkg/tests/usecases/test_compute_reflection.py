"""Tests for ComputeReflectionUseCase."""

import numpy as np
import pytest

from src.app.core.domain.entities import InitialDatum
from src.app.core.usecases import ComputeReflectionUseCase
from tests.conftest import FakeArtifactWriter, FakeLoggingPort, InlineTaskExecutor


class TestComputeReflectionUseCase:
    """Tests for ComputeReflectionUseCase."""

    @pytest.fixture
    def use_case(
        self,
        inline_executor: InlineTaskExecutor,
        fake_artifacts: FakeArtifactWriter,
        fake_logger: FakeLoggingPort,
    ) -> ComputeReflectionUseCase:
        """Create use case with fake dependencies."""
        return ComputeReflectionUseCase(
            executor=inline_executor, artifacts=fake_artifacts, logger=fake_logger
        )

    def test_sech_datum(
        self,
        use_case: ComputeReflectionUseCase,
        sech_datum: InitialDatum,
        small_k_grid: np.ndarray,
    ) -> None:
        """r(0) = -i tanh(mass) and the Born approximation is close."""
        result = use_case.execute(sech_datum, small_k_grid)

        assert result.r0 == pytest.approx(-1j * np.tanh(sech_datum.mass), abs=1e-7)
        assert result.symmetry_ok
        assert result.born_relative_error is not None
        assert result.born_relative_error < 0.05

    def test_writes_table_and_header(
        self,
        use_case: ComputeReflectionUseCase,
        sech_datum: InitialDatum,
        small_k_grid: np.ndarray,
        fake_artifacts: FakeArtifactWriter,
    ) -> None:
        """reflection.csv holds k, Re r, Im r; reflection.json the summary."""
        result = use_case.execute(sech_datum, small_k_grid)

        table = fake_artifacts.tables["reflection.csv"]
        assert list(table) == ["k", "re_r", "im_r"]
        np.testing.assert_array_equal(table["k"], small_k_grid)
        header = fake_artifacts.documents["reflection.json"]
        assert header["datum"] == "sech"
        assert header["potential_sign"] == 1
        assert header["r0"] == [result.r0.real, result.r0.imag]
        assert header["r0_prime"] == result.r0_prime
        assert len(result.artifacts) == 2

    def test_chunks_through_executor(
        self,
        use_case: ComputeReflectionUseCase,
        sech_datum: InitialDatum,
        small_k_grid: np.ndarray,
        inline_executor: InlineTaskExecutor,
    ) -> None:
        """The k-grid is handed to the executor in one map call."""
        use_case.execute(sech_datum, small_k_grid, write_artifacts=False)
        assert inline_executor.calls == 1

    def test_skip_artifacts(
        self,
        use_case: ComputeReflectionUseCase,
        sech_datum: InitialDatum,
        small_k_grid: np.ndarray,
        fake_artifacts: FakeArtifactWriter,
    ) -> None:
        """Nothing is written when artifacts are disabled."""
        result = use_case.execute(sech_datum, small_k_grid, write_artifacts=False)
        assert fake_artifacts.tables == {}
        assert result.artifacts == ()

    def test_zero_datum(
        self,
        use_case: ComputeReflectionUseCase,
        zero_datum: InitialDatum,
        small_k_grid: np.ndarray,
    ) -> None:
        """The zero datum has r = 0 and no Born comparison."""
        result = use_case.execute(zero_datum, small_k_grid)
        assert result.data.sup_abs == 0.0
        assert result.born_relative_error is None

    def test_logs_progress(
        self,
        use_case: ComputeReflectionUseCase,
        sech_datum: InitialDatum,
        small_k_grid: np.ndarray,
        fake_logger: FakeLoggingPort,
    ) -> None:
        """Start and finish are logged at info level."""
        use_case.execute(sech_datum, small_k_grid)
        assert fake_logger.messages("info") == [
            "Computing reflection coefficient",
            "Reflection computed",
        ]
        assert fake_logger.messages("warning") == []
