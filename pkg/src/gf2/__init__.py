"""Gf2 module."""
