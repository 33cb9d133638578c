"""Exact computations around hypersurfaces over imperfect fields of characteristic p."""

__version__ = "0.1.0"
