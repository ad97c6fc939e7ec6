"""Immutable dense matrices over the integers and the rationals."""

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple, Union

from ..errors import DimensionMismatch

Number = Union[int, Fraction]


def _as_integer(value: Any) -> int:
    if isinstance(value, Fraction):
        if value.denominator != 1:
            raise TypeError(f"non-integral entry {value}")
        return value.numerator
    return operator.index(value)


def _as_rational(value: Any) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point entries are not accepted")
    return Fraction(value)


class _DenseMatrix:
    """Shared row-major storage and arithmetic.

    Subclasses set ``_coerce`` to the entry constructor.
    """

    nrows: int
    ncols: int
    entries: Tuple[Number, ...]

    _coerce = staticmethod(_as_rational)

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatch(f"negative shape {self.nrows}x{self.ncols}")
        values = tuple(self._coerce(x) for x in self.entries)
        if len(values) != self.nrows * self.ncols:
            raise DimensionMismatch(
                f"{len(values)} entries for a {self.nrows}x{self.ncols} matrix"
            )
        object.__setattr__(self, "entries", values)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Any]], ncols: int = None):
        """Build a matrix from a list of rows."""
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (ncols or 0)
        if ncols is not None and width != ncols:
            raise DimensionMismatch(f"expected {ncols} columns, got {width}")
        for r in rows:
            if len(r) != width:
                raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls(nrows, ncols, (0,) * (nrows * ncols))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: Tuple[int, int]) -> Number:
        i, j = ij
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> Tuple[Number, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def column(self, j: int) -> Tuple[Number, ...]:
        return tuple(self.entries[i * self.ncols + j] for i in range(self.nrows))

    def to_rows(self) -> List[List[Number]]:
        return [list(self.row(i)) for i in range(self.nrows)]

    def transpose(self):
        return type(self).from_rows(
            [self.column(j) for j in range(self.ncols)], ncols=self.nrows
        )

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def _result_type(self, other):
        if isinstance(self, RationalMatrix) or isinstance(other, RationalMatrix):
            return RationalMatrix
        return IntegerMatrix

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same_shape(other)
        cls = self._result_type(other)
        return cls(self.nrows, self.ncols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_same_shape(other)
        cls = self._result_type(other)
        return cls(self.nrows, self.ncols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return type(self)(self.nrows, self.ncols, tuple(-a for a in self.entries))

    def scale(self, factor: Number):
        cls = RationalMatrix if isinstance(factor, Fraction) else type(self)
        return cls(self.nrows, self.ncols, tuple(factor * a for a in self.entries))

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cls = self._result_type(other)
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for i in range(self.nrows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return cls(self.nrows, other.ncols, tuple(out))

    def apply(self, vector: Sequence[Number]) -> Tuple[Number, ...]:
        """Multiply a column vector."""
        if len(vector) != self.ncols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        return tuple(
            sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.nrows)
        )

    def hstack(self, other):
        """Place ``other`` to the right of this matrix."""
        if self.nrows != other.nrows:
            raise DimensionMismatch("row counts differ")
        cls = self._result_type(other)
        return cls.from_rows(
            [self.row(i) + other.row(i) for i in range(self.nrows)],
            ncols=self.ncols + other.ncols,
        )

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(self.nrows)
        ) + "]"


@dataclass(frozen=True)
class IntegerMatrix(_DenseMatrix):
    """Matrix of arbitrary-precision integers, row-major."""
    nrows: int
    ncols: int
    entries: Tuple[int, ...]

    _coerce = staticmethod(_as_integer)

    def to_rational(self) -> "RationalMatrix":
        return RationalMatrix(self.nrows, self.ncols, self.entries)


@dataclass(frozen=True)
class RationalMatrix(_DenseMatrix):
    """Matrix of exact rationals in lowest terms, row-major."""
    nrows: int
    ncols: int
    entries: Tuple[Fraction, ...]

    _coerce = staticmethod(_as_rational)
