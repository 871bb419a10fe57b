"""File Artifact Writer Adapter.

Implements ArtifactWriterPort on the local filesystem. Tables go through
pandas, JSON documents through pydantic; every file is written to a
temporary sibling first and moved into place with os.replace.
"""

import logging
import os
import tempfile
from collections.abc import Callable, Mapping
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd
from pydantic import TypeAdapter

from ....core.domain.errors import ArtifactError

# Round-trip exact decimal representation of doubles
FLOAT_FORMAT = "%.17g"

_JSON_ADAPTER: TypeAdapter[dict[str, Any]] = TypeAdapter(dict[str, Any])


class FileArtifactWriter:
    """Filesystem implementation of ArtifactWriterPort.

    Example:
        >>> writer = FileArtifactWriter("runs/sech")
        >>> writer.write_table("errors.csv", {"t": ts, "sup_error": errs})
    """

    def __init__(self, out_dir: str | Path, logger: logging.Logger | None = None) -> None:
        """Initialize the writer.

        Args:
            out_dir: Output directory; created on first write.
            logger: Optional logger instance.
        """
        self._out_dir = Path(out_dir)
        self._logger = logger or logging.getLogger(__name__)

    @property
    def out_dir(self) -> Path:
        """Target directory."""
        return self._out_dir

    def _atomic_write(self, name: str, write: Callable[[Path], None]) -> str:
        target = self._out_dir / name
        try:
            self._out_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", dir=self._out_dir)
            os.close(fd)
            tmp = Path(tmp_name)
            try:
                write(tmp)
                os.replace(tmp, target)
            finally:
                if tmp.exists():
                    tmp.unlink()
        except OSError as exc:
            raise ArtifactError(str(target), f"Cannot write artifact: {exc}") from exc
        self._logger.debug("Artifact written", extra={"path": str(target)})
        return str(target)

    def write_table(self, name: str, columns: Mapping[str, np.ndarray]) -> str:
        """Write columns as CSV with full double precision and no index.

        Raises:
            ArtifactError: If the columns differ in length or the write fails.
        """
        try:
            frame = pd.DataFrame({key: np.asarray(value) for key, value in columns.items()})
        except ValueError as exc:
            raise ArtifactError(name, f"Columns do not form a table: {exc}") from exc
        return self._atomic_write(
            name, lambda path: frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
        )

    def write_json(self, name: str, payload: Mapping[str, Any]) -> str:
        """Write a JSON document with stable key order.

        Raises:
            ArtifactError: If the payload is not serialisable or the write fails.
        """
        try:
            data = _JSON_ADAPTER.dump_json(dict(payload), indent=2)
        except (TypeError, ValueError) as exc:
            raise ArtifactError(name, f"Payload is not JSON serialisable: {exc}") from exc
        return self._atomic_write(name, lambda path: path.write_bytes(data + b"\n"))
