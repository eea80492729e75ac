"""Symbolic powers of edge ideals, exact regularity, and Cameron-Walker graph sweeps."""

__version__ = "0.1.0"
