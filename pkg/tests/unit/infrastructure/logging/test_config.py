"""Tests for the logging configuration."""

import logging
from importlib.util import find_spec

import pytest

from src.app.infrastructure.logging.config import NOISY_LOGGERS, configure_logging


class TestConfigureLogging:
    """Tests for configure_logging."""

    def test_noisy_loggers_are_silenced(self) -> None:
        """Every listed library logger is raised to WARNING."""
        configure_logging("DEBUG")
        for name in NOISY_LOGGERS:
            assert logging.getLogger(name).level == logging.WARNING

    @pytest.mark.parametrize("name", NOISY_LOGGERS)
    def test_noisy_loggers_are_importable(self, name: str) -> None:
        """Only loggers of modules present in the runtime are listed."""
        assert find_spec(name) is not None

    def test_single_stream_handler(self) -> None:
        """Reconfiguring does not stack handlers."""
        configure_logging("INFO")
        configure_logging("INFO")
        assert len(logging.getLogger().handlers) == 1
