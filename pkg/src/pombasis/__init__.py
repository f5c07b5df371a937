"""Pommaret bases, Hilbert series invariants and degree bounds over Q."""

__version__ = "0.1.0"
