"""Command-line Entry Point.

Usage:
    python -m src.app.main --out runs/sech verify --family sech --epsilon 0.05
"""

import sys

from src.app.cli import main


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
