"""Use cases tests package.

Tests for application use cases with mocked ports.
"""
