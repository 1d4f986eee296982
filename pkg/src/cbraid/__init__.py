"""Computations in the complex reflection groups G(de,e,n) and their braid groups."""

__version__ = "0.1.0"
