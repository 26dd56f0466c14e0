"""Exact noncommutative symplectic calculus on the rank-two Calogero-Moser phase space."""

__version__ = "0.1.0"
