"""Consecutive patterns of relations in inversion sequences."""

__version__ = "0.1.0"
