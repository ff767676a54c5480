"""Unit tests with no external dependencies."""
