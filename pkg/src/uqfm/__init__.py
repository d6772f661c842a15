"""Exact verification of Freidel-Maillet type presentations of U_q(sl2)."""

__version__ = "0.1.0"
