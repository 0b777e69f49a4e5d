"""Shrinker module."""
