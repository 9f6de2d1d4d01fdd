"""Exact toolkit for the exceptional algebraic solutions of Painleve VI."""

__version__ = "0.1.0"
