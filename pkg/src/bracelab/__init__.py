"""Finite left braces, the two braces on the integers, and their Yang-Baxter solutions."""

from .core import FiniteBrace, direct_sum, is_abelian, validate_brace
from .errors import BraceLabError, ValidationError
from .ybe import Solution, associated_solution, validate_solution

__all__ = [
    "BraceLabError",
    "FiniteBrace",
    "Solution",
    "ValidationError",
    "associated_solution",
    "direct_sum",
    "is_abelian",
    "validate_brace",
    "validate_solution",
]
