"""Modeler module."""
