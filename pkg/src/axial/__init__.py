"""Exact computations with axial algebras of Jordan type half."""

__version__ = "0.1.0"
