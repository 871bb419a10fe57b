"""Ports for the Painlevé sector verification toolkit.

Ports define the interfaces (contracts) that adapters must implement.
They follow the hexagonal architecture pattern, separating the numerical
core from file I/O, threading and logging.

Ports are defined using typing.Protocol for structural subtyping.
"""

from .artifact_port import ArtifactWriterPort, DatumReaderPort
from .executor_port import TaskExecutorPort
from .logging_port import LoggingPort

__all__ = [
    # Artifacts
    "ArtifactWriterPort",
    "DatumReaderPort",
    # Concurrency
    "TaskExecutorPort",
    # Logging
    "LoggingPort",
]
