"""Task Executor Port.

Interface for running independent numerical tasks in parallel.
"""

from collections.abc import Callable, Iterable
from typing import Protocol, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class TaskExecutorPort(Protocol):
    """Port interface for order-preserving parallel map.

    Implementations may use threads or run inline; results must come back
    in the order of the inputs and the first task exception must propagate.
    """

    @property
    def workers(self) -> int:
        """Number of concurrent workers."""
        ...

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """Apply fn to every item.

        Args:
            fn: Task function.
            items: Task inputs.

        Returns:
            Results in input order.
        """
        ...
