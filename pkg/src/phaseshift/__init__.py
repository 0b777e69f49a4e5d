"""Phaseshift module."""
