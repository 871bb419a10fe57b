"""Tests for FileArtifactWriter."""

import json
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from src.app.adapters.outbound.artifacts import FileArtifactWriter
from src.app.core.domain.errors import ArtifactError


class TestFileArtifactWriter:
    """Tests for FileArtifactWriter."""

    @pytest.fixture
    def writer(self, tmp_path: Path) -> FileArtifactWriter:
        """Writer into a nested, not yet existing directory."""
        return FileArtifactWriter(tmp_path / "runs" / "sech")

    def test_table_round_trips_doubles(self, writer: FileArtifactWriter) -> None:
        """CSV keeps full double precision and has no index column."""
        t = np.array([20.0, 40.0])
        err = np.array([1.0 / 3.0, 2.0e-7 / 7.0])
        path = writer.write_table("errors.csv", {"t": t, "sup_error": err})

        frame = pd.read_csv(path, float_precision="round_trip")
        assert list(frame.columns) == ["t", "sup_error"]
        np.testing.assert_array_equal(frame["sup_error"].to_numpy(), err)

    def test_json_document(self, writer: FileArtifactWriter) -> None:
        """JSON keeps key order, nulls and numpy floats."""
        path = writer.write_json(
            "reflection.json", {"r0": [0.0, -0.15], "born": None, "sup": np.float64(0.2)}
        )

        text = Path(path).read_text()
        assert json.loads(text) == {"r0": [0.0, -0.15], "born": None, "sup": 0.2}
        assert text.index('"r0"') < text.index('"born"')

    def test_creates_directory(self, writer: FileArtifactWriter) -> None:
        """The output directory is created on first write."""
        writer.write_json("a.json", {})
        assert writer.out_dir.is_dir()

    def test_overwrites_without_leftovers(self, writer: FileArtifactWriter) -> None:
        """A second write replaces the file and leaves no temporary siblings."""
        writer.write_json("a.json", {"v": 1})
        writer.write_json("a.json", {"v": 2})
        assert [p.name for p in writer.out_dir.iterdir()] == ["a.json"]
        assert json.loads((writer.out_dir / "a.json").read_text()) == {"v": 2}

    def test_ragged_columns(self, writer: FileArtifactWriter) -> None:
        """Columns of different length are rejected."""
        with pytest.raises(ArtifactError):
            writer.write_table("bad.csv", {"a": np.zeros(2), "b": np.zeros(3)})

    def test_unserialisable_payload(self, writer: FileArtifactWriter) -> None:
        """Objects without a JSON form are rejected."""
        with pytest.raises(ArtifactError):
            writer.write_json("bad.json", {"v": object()})

    def test_unwritable_directory(self, tmp_path: Path) -> None:
        """A file in place of the directory is an artifact error."""
        blocker = tmp_path / "blocker"
        blocker.write_text("")
        with pytest.raises(ArtifactError):
            FileArtifactWriter(blocker).write_json("a.json", {})
