"""Tests for CsvDatumReader."""

from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.app.adapters.outbound.artifacts import CsvDatumReader
from src.app.core.domain.errors import UsageError


def _write(path: Path, x: np.ndarray, u0: np.ndarray, **extra: np.ndarray) -> str:
    pd.DataFrame({"x": x, "u0": u0, **extra}).to_csv(path, index=False)
    return str(path)


class TestCsvDatumReader:
    """Tests for CsvDatumReader."""

    @pytest.fixture
    def reader(self) -> CsvDatumReader:
        """Create reader."""
        return CsvDatumReader()

    def test_reads_datum(self, reader: CsvDatumReader, tmp_path: Path) -> None:
        """Columns x and u0 become an InitialDatum named after the file."""
        x = np.linspace(-20.0, 20.0, 4001)
        path = _write(tmp_path / "bump.csv", x, 0.05 / np.cosh(x), note=np.zeros_like(x))

        datum = reader.read_datum(path)
        assert datum.name == "bump.csv"
        assert datum.support_radius == 20.0
        assert datum.mass == pytest.approx(0.05 * np.pi, rel=1e-6)

    def test_declared_support(self, reader: CsvDatumReader, tmp_path: Path) -> None:
        """An explicit support radius overrides max |x|."""
        x = np.linspace(-20.0, 20.0, 4001)
        path = _write(tmp_path / "bump.csv", x, 0.05 / np.cosh(x))
        assert reader.read_datum(path, support_radius=25.0).support_radius == 25.0

    def test_missing_file(self, reader: CsvDatumReader, tmp_path: Path) -> None:
        """A missing path is a usage error."""
        with pytest.raises(UsageError):
            reader.read_datum(str(tmp_path / "absent.csv"))

    def test_missing_column(self, reader: CsvDatumReader, tmp_path: Path) -> None:
        """Files without u0 are rejected."""
        path = tmp_path / "bad.csv"
        pd.DataFrame({"x": [0.0, 1.0], "u": [0.0, 0.0]}).to_csv(path, index=False)
        with pytest.raises(UsageError, match="u0"):
            reader.read_datum(str(path))

    def test_invalid_grid(self, reader: CsvDatumReader, tmp_path: Path) -> None:
        """A non-uniform grid fails datum validation as a usage error."""
        x = np.array([-2.0, -1.0, 0.5, 1.0, 2.0])
        path = _write(tmp_path / "uneven.csv", x, np.zeros_like(x))
        with pytest.raises(UsageError):
            reader.read_datum(path)
