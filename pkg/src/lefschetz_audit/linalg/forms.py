"""Rational nullspaces and signatures of symmetric forms."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import sympy

from ..errors import NonSquare, NotSymmetric


@dataclass(frozen=True)
class FormSignature:
    """Inertia of a symmetric form: counts of +, - and 0 after diagonalization."""
    positive: int
    negative: int
    null: int
    symmetrized: bool = False

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.null

    @property
    def value(self) -> int:
        """positive minus negative"""
        return self.positive - self.negative


def _to_sympy(m) -> sympy.Matrix:
    return sympy.Matrix(
        m.nrows, m.ncols,
        [sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Integer(x)
         for x in m.entries],
    )


def _from_sympy(x) -> Fraction:
    x = sympy.Rational(x)
    return Fraction(int(x.p), int(x.q))


def rational_rank(m) -> int:
    """Rank by sympy's fraction-free elimination, independent of the SNF path."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return int(_to_sympy(m).rank())


def rational_nullspace(m) -> List[Tuple[Fraction, ...]]:
    """Basis of {x : m x = 0} over the rationals.

    Args:
        m: RationalMatrix or IntegerMatrix

    Returns:
        List of basis vectors; its length is ``cols - rank``
    """
    if m.ncols == 0:
        return []
    if m.nrows == 0 or m.is_zero():
        return [tuple(Fraction(int(i == j)) for j in range(m.ncols)) for i in range(m.ncols)]
    basis = _to_sympy(m).nullspace()
    return [tuple(_from_sympy(x) for x in vec) for vec in basis]


def symmetric_signature(q, symmetrize: bool = False) -> FormSignature:
    """Signature of a symmetric rational form by congruence diagonalization.

    Args:
        q: Square RationalMatrix or IntegerMatrix
        symmetrize: Replace q by (q + qᵀ)/2 instead of rejecting asymmetric input

    Returns:
        FormSignature; ``symmetrized`` is True when the replacement changed q

    Raises:
        NonSquare: q is not square
        NotSymmetric: q is asymmetric and ``symmetrize`` is False
    """
    if not q.is_square:
        raise NonSquare(f"form must be square, got {q.nrows}x{q.ncols}")
    n = q.nrows
    qt = q.transpose()
    changed = False
    if q != qt:
        if not symmetrize:
            raise NotSymmetric("form is not symmetric")
        q = (q + qt).scale(Fraction(1, 2))
        changed = True

    a = [[Fraction(x) for x in q.row(i)] for i in range(n)]
    positive = negative = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if swap is not None:
                a[k], a[swap] = a[swap], a[k]
                for r in a:
                    r[k], r[swap] = r[swap], r[k]
            else:
                partner = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if partner is None:
                    continue
                # row_k += row_j, col_k += col_j; the new pivot is 2 q_kj
                a[k] = [x + y for x, y in zip(a[k], a[partner])]
                for r in a:
                    r[k] += r[partner]
        pivot = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
                for r in a:
                    r[i] -= f * r[k]
        if pivot > 0:
            positive += 1
        else:
            negative += 1
    return FormSignature(positive, negative, n - positive - negative, symmetrized=changed)
