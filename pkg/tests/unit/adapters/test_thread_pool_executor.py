"""Tests for ThreadPoolTaskExecutor."""

import threading

import pytest

from src.app.adapters.outbound.tasks import ThreadPoolTaskExecutor
from src.app.core.domain.errors import SolverError, UsageError


class TestThreadPoolTaskExecutor:
    """Tests for ThreadPoolTaskExecutor."""

    @pytest.mark.parametrize("workers", [1, 4])
    def test_preserves_order(self, workers: int) -> None:
        """Results come back in input order."""
        executor = ThreadPoolTaskExecutor(workers=workers)
        assert executor.map(lambda v: v * v, range(10)) == [v * v for v in range(10)]
        assert executor.workers == workers

    def test_single_worker_runs_inline(self) -> None:
        """One worker uses the calling thread."""
        caller = threading.get_ident()
        idents = ThreadPoolTaskExecutor(workers=1).map(lambda _: threading.get_ident(), [0, 1])
        assert idents == [caller, caller]

    def test_propagates_domain_errors(self) -> None:
        """Exceptions from a task reach the caller unchanged."""

        def fail(v: int) -> int:
            raise SolverError("Step too large", v)

        with pytest.raises(SolverError):
            ThreadPoolTaskExecutor(workers=2).map(fail, [1, 2, 3])

    def test_empty_input(self) -> None:
        """No items, no results."""
        assert ThreadPoolTaskExecutor(workers=3).map(str, []) == []

    @pytest.mark.parametrize("workers", [0, -2])
    def test_rejects_workers(self, workers: int) -> None:
        """At least one worker is required."""
        with pytest.raises(UsageError):
            ThreadPoolTaskExecutor(workers=workers)
