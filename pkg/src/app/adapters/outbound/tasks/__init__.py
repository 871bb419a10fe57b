"""Task execution adapters."""

from .thread_pool_executor import ThreadPoolTaskExecutor

__all__ = ["ThreadPoolTaskExecutor"]
