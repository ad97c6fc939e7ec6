"""Integer matrix algorithms: Smith normal form, rank, symplectic tests."""

from typing import List, Tuple

from ..errors import DimensionMismatch
from .matrix import IntegerMatrix


def _swap_rows(a: List[List[int]], i: int, j: int):
    a[i], a[j] = a[j], a[i]


def _swap_cols(a: List[List[int]], i: int, j: int):
    for r in a:
        r[i], r[j] = r[j], r[i]


def _add_row(a: List[List[int]], target: int, source: int, factor: int):
    """row[target] += factor * row[source]"""
    src = a[source]
    a[target] = [x + factor * y for x, y in zip(a[target], src)]


def _add_col(a: List[List[int]], target: int, source: int, factor: int):
    """col[target] += factor * col[source]"""
    for r in a:
        r[target] += factor * r[source]


def _smallest_entry(a: List[List[int]], t: int) -> Tuple[int, int]:
    best = None
    for i in range(t, len(a)):
        for j in range(t, len(a[i])):
            x = a[i][j]
            if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: IntegerMatrix) -> Tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """Compute the Smith normal form together with its transforms.

    Args:
        m: Integer matrix of any shape

    Returns:
        ``(d, u, v)`` with ``u @ m @ v == d``, ``u`` and ``v`` unimodular and
        the diagonal of ``d`` nonnegative with d1 | d2 | ...
    """
    rows, cols = m.shape
    a = m.to_rows()
    u = IntegerMatrix.identity(rows).to_rows()
    v = IntegerMatrix.identity(cols).to_rows()

    for t in range(min(rows, cols)):
        pos = _smallest_entry(a, t)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                _swap_rows(a, i, t)
                _swap_rows(u, i, t)
            if j != t:
                _swap_cols(a, j, t)
                _swap_cols(v, j, t)
            p = a[t][t]

            clean = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                if a[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                if a[t][j]:
                    clean = False
            if not clean:
                pos = _smallest_entry_in_cross(a, t)
                continue

            # divisibility d_t | every remaining entry
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, t, offender, 1)
            _add_row(u, t, offender, 1)
            pos = (t, t)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return (
        IntegerMatrix.from_rows(a, ncols=cols),
        IntegerMatrix.from_rows(u, ncols=rows),
        IntegerMatrix.from_rows(v, ncols=cols),
    )


def _smallest_entry_in_cross(a: List[List[int]], t: int) -> Tuple[int, int]:
    """Smallest nonzero entry in row t or column t (from position t on)."""
    best = (t, t)
    for i in range(t + 1, len(a)):
        if a[i][t] and abs(a[i][t]) < abs(a[best[0]][best[1]]):
            best = (i, t)
    for j in range(t + 1, len(a[t])):
        if a[t][j] and abs(a[t][j]) < abs(a[best[0]][best[1]]):
            best = (t, j)
    return best


def diagonal(d: IntegerMatrix) -> List[int]:
    return [d[i, i] for i in range(min(d.shape))]


def rank(m: IntegerMatrix) -> int:
    """Rank over the rationals, read off the Smith normal form."""
    d, _, _ = smith_normal_form(m)
    return sum(1 for x in diagonal(d) if x != 0)


def elementary_divisors(m: IntegerMatrix) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    d, _, _ = smith_normal_form(m)
    return [x for x in diagonal(d) if x != 0]


def standard_symplectic_form(g: int) -> IntegerMatrix:
    """Gram matrix J of the intersection form in the basis a1, b1, ..., ag, bg.

    <a_i, b_i> = +1, <b_i, a_i> = -1, every other pairing is zero.
    """
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return IntegerMatrix.from_rows(rows, ncols=n)


def is_symplectic(m: IntegerMatrix, g: int) -> bool:
    """True iff mᵀ J m = J."""
    if m.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {m.nrows}x{m.ncols}")
    j = standard_symplectic_form(g)
    return m.transpose() @ j @ m == j


def symplectic_inverse(m: IntegerMatrix, g: int) -> IntegerMatrix:
    """Inverse of a symplectic matrix, m⁻¹ = J⁻¹ mᵀ J = -J mᵀ J."""
    j = standard_symplectic_form(g)
    return -(j @ m.transpose() @ j)
