"""First homology of a closed genus-g surface, curves and Dehn twists.

Coordinates are taken in the ordered basis a1, b1, ..., ag, bg with
<a_i, b_i> = +1. Matrices act on column vectors.
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional, Sequence, Tuple

from ..errors import DimensionMismatch, InvalidCurve
from ..linalg import IntegerMatrix, is_symplectic, standard_symplectic_form, symplectic_inverse


def require_genus(g: int) -> int:
    if not isinstance(g, int) or isinstance(g, bool) or g < 0:
        raise DimensionMismatch(f"genus must be a nonnegative integer, got {g!r}")
    return g


@dataclass(frozen=True)
class HomologyClass:
    """Integer vector of length 2g in the basis a1, b1, ..., ag, bg."""
    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) % 2:
            raise DimensionMismatch(f"class needs an even number of coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, g: int) -> "HomologyClass":
        return cls((0,) * (2 * g))

    @classmethod
    def basis(cls, g: int, index: int) -> "HomologyClass":
        return cls(tuple(int(i == index) for i in range(2 * g)))

    @property
    def genus(self) -> int:
        return len(self.coords) // 2

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(tuple(-c for c in self.coords))

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch("classes live in different genera")
        return HomologyClass(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def is_primitive(v: HomologyClass) -> bool:
    """True iff v is nonzero and the gcd of its coordinates is 1."""
    return gcd(*v.coords) == 1 if v.coords else False


def pairing(x: HomologyClass, y: HomologyClass, g: int) -> int:
    """Algebraic intersection number <x, y>."""
    n = 2 * g
    if len(x.coords) != n or len(y.coords) != n:
        raise DimensionMismatch(f"classes must have {n} coordinates for genus {g}")
    a, b = x.coords, y.coords
    return sum(a[2 * i] * b[2 * i + 1] - a[2 * i + 1] * b[2 * i] for i in range(g))


class CurveKind(str, Enum):
    NONSEPARATING = "nonsep"
    SEPARATING = "sep"


@dataclass(frozen=True)
class Curve:
    """A vanishing cycle, known only through its homological data."""
    kind: CurveKind
    homology_class: Optional[HomologyClass] = None
    side_genus: Optional[int] = None

    @classmethod
    def nonseparating(cls, coords: Sequence[int]) -> "Curve":
        return cls(CurveKind.NONSEPARATING, homology_class=HomologyClass(tuple(coords)))

    @classmethod
    def separating(cls, side_genus: int) -> "Curve":
        return cls(CurveKind.SEPARATING, side_genus=side_genus)

    @property
    def is_separating(self) -> bool:
        return self.kind is CurveKind.SEPARATING

    def validate(self, g: int) -> "Curve":
        """Check the curve against fiber genus g.

        Raises:
            InvalidCurve: wrong arity, non-primitive class or side genus out of range
        """
        if self.is_separating:
            k = self.side_genus
            if g < 2:
                raise InvalidCurve(f"separating curves need genus at least 2, fiber genus is {g}")
            if k is None or not 1 <= k <= g - 1:
                raise InvalidCurve(f"side genus {k} outside 1..{g - 1}")
            return self
        v = self.homology_class
        if v is None or len(v.coords) != 2 * g:
            arity = 0 if v is None else len(v.coords)
            raise InvalidCurve(f"class has {arity} coordinates, expected {2 * g}")
        if not is_primitive(v):
            raise InvalidCurve(f"class not primitive: {v}")
        return self

    def homology(self, g: int) -> HomologyClass:
        """Homology class; separating curves are null-homologous."""
        if self.is_separating:
            return HomologyClass.zero(g)
        return self.homology_class


@dataclass(frozen=True)
class SymplecticMatrix:
    """Integer 2g x 2g matrix preserving the intersection form."""
    g: int
    m: IntegerMatrix

    def __post_init__(self):
        if not is_symplectic(self.m, self.g):
            raise DimensionMismatch("matrix does not preserve the intersection form")

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls(g, IntegerMatrix.identity(2 * g))

    @classmethod
    def _trusted(cls, g: int, m: IntegerMatrix) -> "SymplecticMatrix":
        # products and inverses of symplectic matrices stay symplectic
        obj = object.__new__(cls)
        object.__setattr__(obj, "g", g)
        object.__setattr__(obj, "m", m)
        return obj

    def __matmul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if other.g != self.g:
            raise DimensionMismatch(f"genus {self.g} times genus {other.g}")
        return SymplecticMatrix._trusted(self.g, self.m @ other.m)

    def inverse(self) -> "SymplecticMatrix":
        return SymplecticMatrix._trusted(self.g, symplectic_inverse(self.m, self.g))

    def transpose(self) -> "SymplecticMatrix":
        return SymplecticMatrix._trusted(self.g, self.m.transpose())

    def conjugate(self, by: "SymplecticMatrix") -> "SymplecticMatrix":
        """by · self · by⁻¹"""
        return by @ self @ by.inverse()

    def is_identity(self) -> bool:
        return self.m == IntegerMatrix.identity(2 * self.g)

    def power(self, k: int) -> "SymplecticMatrix":
        result = SymplecticMatrix.identity(self.g)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result @ base
        return result


def commutator(c: SymplecticMatrix, d: SymplecticMatrix) -> SymplecticMatrix:
    """[c, d] = c d c⁻¹ d⁻¹"""
    return c @ d @ c.inverse() @ d.inverse()


def transvection(c: Curve, g: int) -> SymplecticMatrix:
    """Homological action of the right-handed Dehn twist about c.

    x -> x + <x, v> v for a non-separating curve of class v, the identity
    for a separating curve.
    """
    require_genus(g)
    c.validate(g)
    if c.is_separating:
        return SymplecticMatrix.identity(g)
    v = c.homology_class.coords
    # column j of T is e_j + (J v)_j v
    jv = standard_symplectic_form(g).apply(v)
    n = 2 * g
    entries = tuple(int(i == j) + jv[j] * v[i] for i in range(n) for j in range(n))
    return SymplecticMatrix(g, IntegerMatrix(n, n, entries))
