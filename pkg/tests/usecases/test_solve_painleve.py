"""Tests for SolvePainleveUseCase."""

import pytest

from src.app.core.domain.errors import DomainRangeError
from src.app.core.usecases import SolvePainleveUseCase
from tests.conftest import FakeArtifactWriter, FakeLoggingPort


class TestSolvePainleveUseCase:
    """Tests for SolvePainleveUseCase."""

    @pytest.fixture
    def use_case(
        self, fake_artifacts: FakeArtifactWriter, fake_logger: FakeLoggingPort
    ) -> SolvePainleveUseCase:
        """Create use case with fake dependencies."""
        return SolvePainleveUseCase(artifacts=fake_artifacts, logger=fake_logger)

    def test_ablowitz_segur_solution(self, use_case: SolvePainleveUseCase) -> None:
        """The Airy ratio at y = 6 is alpha and u(-s) = -u(s)."""
        result = use_case.execute(-0.5j, nodes=128)

        assert result.alpha == pytest.approx(0.5)
        assert result.airy_ratio == pytest.approx(0.5, abs=1e-6)
        assert result.negation_residual is not None
        assert result.negation_residual < 1e-10

    def test_zero_s(self, use_case: SolvePainleveUseCase) -> None:
        """s = 0 gives the trivial table and no negation check."""
        result = use_case.execute(0j)
        assert result.solution.method == "trivial"
        assert result.negation_residual is None
        assert result.airy_ratio == 0.0

    def test_skip_negation(self, use_case: SolvePainleveUseCase) -> None:
        """check_negation=False leaves the residual unset."""
        result = use_case.execute(-0.3j, nodes=128, check_negation=False)
        assert result.negation_residual is None

    def test_writes_table_and_header(
        self, use_case: SolvePainleveUseCase, fake_artifacts: FakeArtifactWriter
    ) -> None:
        """painleve.csv holds y, u, u'; painleve.json the solve summary."""
        result = use_case.execute(-0.3j, nodes=128, check_negation=False)

        table = fake_artifacts.tables["painleve.csv"]
        assert list(table) == ["y", "u", "u_prime"]
        assert table["y"].size == 128
        header = fake_artifacts.documents["painleve.json"]
        assert header["s"] == [0.0, -0.3]
        assert header["nodes"] == 128
        assert header["method"] == result.solution.method

    def test_rejects_real_s(self, use_case: SolvePainleveUseCase) -> None:
        """Real s is outside the Ablowitz-Segur family."""
        with pytest.raises(DomainRangeError):
            use_case.execute(0.5 + 0j)

    def test_logs(self, use_case: SolvePainleveUseCase, fake_logger: FakeLoggingPort) -> None:
        """Start and finish are logged."""
        use_case.execute(-0.3j, nodes=128, check_negation=False)
        assert fake_logger.messages("info") == ["Solving Painlevé II", "Painlevé II solved"]
