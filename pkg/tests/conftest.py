"""Pytest configuration and shared fixtures.

This module provides common fixtures and fake port implementations
for testing the domain services and use cases.
"""

from collections.abc import Callable, Iterable, Mapping
from typing import Any, TypeVar

import numpy as np
import pytest

from src.app.core.domain.entities import InitialDatum
from src.app.core.domain.services import builtin_family, clustered_k_grid

T = TypeVar("T")
R = TypeVar("R")


# =============================================================================
# Fake ports
# =============================================================================


class FakeLoggingPort:
    """Fake logging port for testing."""

    def __init__(self) -> None:
        self.logs: list[dict[str, Any]] = []

    def info(self, msg: str, **context: Any) -> None:
        self.logs.append({"level": "info", "msg": msg, **context})

    def warning(self, msg: str, **context: Any) -> None:
        self.logs.append({"level": "warning", "msg": msg, **context})

    def error(self, msg: str, **context: Any) -> None:
        self.logs.append({"level": "error", "msg": msg, **context})

    def debug(self, msg: str, **context: Any) -> None:
        self.logs.append({"level": "debug", "msg": msg, **context})

    def messages(self, level: str | None = None) -> list[str]:
        """Logged messages, optionally of one level."""
        return [log["msg"] for log in self.logs if level is None or log["level"] == level]


class FakeArtifactWriter:
    """In-memory artifact writer for testing."""

    def __init__(self) -> None:
        self.tables: dict[str, dict[str, np.ndarray]] = {}
        self.documents: dict[str, dict[str, Any]] = {}

    def write_table(self, name: str, columns: Mapping[str, np.ndarray]) -> str:
        self.tables[name] = {k: np.asarray(v) for k, v in columns.items()}
        return f"memory://{name}"

    def write_json(self, name: str, payload: Mapping[str, Any]) -> str:
        self.documents[name] = dict(payload)
        return f"memory://{name}"


class InlineTaskExecutor:
    """Task executor running everything in the calling thread."""

    def __init__(self, workers: int = 2) -> None:
        self._workers = workers
        self.calls = 0

    @property
    def workers(self) -> int:
        return self._workers

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        self.calls += 1
        return [fn(item) for item in items]


@pytest.fixture
def fake_logger() -> FakeLoggingPort:
    """Return a fake logging port."""
    return FakeLoggingPort()


@pytest.fixture
def fake_artifacts() -> FakeArtifactWriter:
    """Return an in-memory artifact writer."""
    return FakeArtifactWriter()


@pytest.fixture
def inline_executor() -> InlineTaskExecutor:
    """Return an inline task executor."""
    return InlineTaskExecutor()


# =============================================================================
# Numerical fixtures
# =============================================================================

# Coarser than the production defaults; enough for unit-level accuracy
TEST_SPACING = 0.004
TEST_SUPPORT = 25.0


@pytest.fixture
def small_k_grid() -> np.ndarray:
    """Symmetric k-grid with the uniform cluster and a short tail to |k| = 4."""
    return clustered_k_grid(k_max=4.0, tail_points=24)


@pytest.fixture
def sech_datum() -> InitialDatum:
    """0.05 sech(x) on a moderate grid."""
    return builtin_family(
        "sech", {"epsilon": 0.05, "spacing": TEST_SPACING, "support_radius": TEST_SUPPORT}
    )


@pytest.fixture
def zero_mass_datum() -> InitialDatum:
    """0.05 sech'(x), mass zero."""
    return builtin_family(
        "zero-mass", {"epsilon": 0.05, "spacing": TEST_SPACING, "support_radius": TEST_SUPPORT}
    )


@pytest.fixture
def zero_datum() -> InitialDatum:
    """Identically vanishing datum."""
    grid = np.linspace(-10.0, 10.0, 2001)
    return InitialDatum(name="zero", grid=grid, values=np.zeros_like(grid), support_radius=10.0)
