"""Attack module."""
