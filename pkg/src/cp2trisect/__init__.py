"""Combinatorics and geometry of the 9-vertex complex projective plane."""

__version__ = "0.1.0"
