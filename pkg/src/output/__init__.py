"""Output module."""
