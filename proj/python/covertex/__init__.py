"""Exact checker for graded vertex coalgebra structures."""

from ._core import SpecError, cli, roundtrip

__all__ = ["SpecError", "cli", "roundtrip"]
