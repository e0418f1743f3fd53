"""Exact computations with state polynomials, Tutte polynomials, binary
codes and Construction A theta series."""

__version__ = "0.1.0"
