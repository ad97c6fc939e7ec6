"""Lefschetz fibration invariant and inequality auditor."""

__version__ = "0.1.0"
