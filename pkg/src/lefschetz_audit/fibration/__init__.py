"""Factorization data model and closure verification."""

from .flags import GroundTruthFlags, Tristate
from .model import (
    CONVENTION,
    RESERVED_NAMES,
    ClosureVerdict,
    Factorization,
    FiberCounts,
    counts,
    curve_name_problem,
    monodromy_product,
    verify_closure,
)

__all__ = [
    "CONVENTION",
    "ClosureVerdict",
    "Factorization",
    "FiberCounts",
    "GroundTruthFlags",
    "RESERVED_NAMES",
    "Tristate",
    "counts",
    "curve_name_problem",
    "monodromy_product",
    "verify_closure",
]
