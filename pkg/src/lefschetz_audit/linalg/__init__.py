"""Exact integer and rational linear algebra."""

from .forms import FormSignature, rational_nullspace, rational_rank, symmetric_signature
from .integer import (
    elementary_divisors,
    is_symplectic,
    rank,
    smith_normal_form,
    standard_symplectic_form,
    symplectic_inverse,
)
from .matrix import IntegerMatrix, RationalMatrix

__all__ = [
    "FormSignature",
    "IntegerMatrix",
    "RationalMatrix",
    "elementary_divisors",
    "is_symplectic",
    "rank",
    "rational_nullspace",
    "rational_rank",
    "smith_normal_form",
    "standard_symplectic_form",
    "symmetric_signature",
    "symplectic_inverse",
]
