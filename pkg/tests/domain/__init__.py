"""Domain tests package.

Tests for value objects and entities.
"""
