"""Tests for the dependency container."""

import inspect
from pathlib import Path

from src.app.cli import commands
from src.app.infrastructure.container import Container


class TestContainer:
    """Tests for Container wiring."""

    def test_every_factory_is_wired_into_the_cli(self) -> None:
        """Each use-case factory is called by some command handler."""
        source = inspect.getsource(commands)
        factories = [
            name
            for name, member in inspect.getmembers(Container, inspect.isfunction)
            if not name.startswith("_")
        ]
        assert factories
        for name in factories:
            assert f".{name}()" in source, name

    def test_factories_build_use_cases(self, tmp_path: Path) -> None:
        """Factories return fresh use cases sharing the configured writer."""
        container = Container(out_dir=tmp_path, threads=1)
        assert container.run_experiment() is not container.run_experiment()
        assert container.artifacts.out_dir == tmp_path
