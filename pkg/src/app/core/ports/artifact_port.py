"""Artifact Ports.

Interfaces for persisting run artifacts (CSV tables, JSON manifests) and
for reading user-supplied initial data.
"""

from collections.abc import Mapping
from typing import Any, Protocol

import numpy as np

from ..domain.entities import InitialDatum


class ArtifactWriterPort(Protocol):
    """Port interface for writing run artifacts.

    Implementations must write atomically: a partially written file must
    never be visible under its final name.
    """

    def write_table(self, name: str, columns: Mapping[str, np.ndarray]) -> str:
        """Write equally long columns as a CSV table.

        Args:
            name: File name relative to the output directory, e.g. 'reflection.csv'.
            columns: Ordered column name -> values.

        Returns:
            Path of the written file.

        Raises:
            ArtifactError: If the file cannot be written.
        """
        ...

    def write_json(self, name: str, payload: Mapping[str, Any]) -> str:
        """Write a JSON document.

        Args:
            name: File name relative to the output directory.
            payload: JSON-serialisable mapping.

        Returns:
            Path of the written file.

        Raises:
            ArtifactError: If the file cannot be written.
        """
        ...


class DatumReaderPort(Protocol):
    """Port interface for loading an initial datum from storage."""

    def read_datum(self, path: str, support_radius: float | None = None) -> InitialDatum:
        """Read a sampled datum with columns x and u0.

        Args:
            path: Source file.
            support_radius: Declared support; defaults to the grid half width.

        Raises:
            UsageError: If the file is missing or malformed.
        """
        ...
