"""CSV Datum Reader Adapter.

Implements DatumReaderPort for files with columns x and u0.
"""

from pathlib import Path

import numpy as np
import pandas as pd

from ....core.domain.entities import InitialDatum
from ....core.domain.errors import DomainError, UsageError

REQUIRED_COLUMNS = ("x", "u0")


class CsvDatumReader:
    """Reads a sampled initial datum from CSV."""

    def read_datum(self, path: str, support_radius: float | None = None) -> InitialDatum:
        """Load and validate a datum.

        Args:
            path: CSV file with a header containing x and u0.
            support_radius: Declared support; defaults to max |x|.

        Raises:
            UsageError: If the file is missing, malformed or fails validation.
        """
        source = Path(path)
        if not source.is_file():
            raise UsageError(path, "Datum file not found")
        try:
            frame = pd.read_csv(source)
        except (ValueError, pd.errors.ParserError) as exc:
            raise UsageError(path, f"Cannot parse datum file: {exc}") from exc
        missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
        if missing:
            raise UsageError(path, f"Datum file lacks columns {missing}")

        x = frame["x"].to_numpy(dtype=float)
        u0 = frame["u0"].to_numpy(dtype=float)
        radius = float(np.max(np.abs(x))) if support_radius is None else support_radius
        try:
            return InitialDatum(name=source.name, grid=x, values=u0, support_radius=radius)
        except DomainError as exc:
            raise UsageError(path, f"Invalid datum: {exc}") from exc
