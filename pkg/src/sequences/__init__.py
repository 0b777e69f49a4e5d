"""Sequences module."""
