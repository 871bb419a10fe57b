"""Artifact adapters: CSV/JSON writer and CSV datum reader."""

from .csv_datum_reader import CsvDatumReader
from .file_artifact_writer import FileArtifactWriter

__all__ = ["CsvDatumReader", "FileArtifactWriter"]
