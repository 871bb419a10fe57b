"""Tests for logging infrastructure."""
