"""Surface homology, vanishing cycles and Dehn twist actions."""

from .model import (
    Curve,
    CurveKind,
    HomologyClass,
    SymplecticMatrix,
    commutator,
    is_primitive,
    pairing,
    require_genus,
    transvection,
)

__all__ = [
    "Curve",
    "CurveKind",
    "HomologyClass",
    "SymplecticMatrix",
    "commutator",
    "is_primitive",
    "pairing",
    "require_genus",
    "transvection",
]
