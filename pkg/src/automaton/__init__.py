"""Automaton module."""
