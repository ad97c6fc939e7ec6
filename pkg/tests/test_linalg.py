"""Tests for exact integer and rational linear algebra."""

import random
from fractions import Fraction

import pytest
import sympy

from lefschetz_audit.errors import DimensionMismatch, NonSquare, NotSymmetric
from lefschetz_audit.linalg import (
    IntegerMatrix,
    RationalMatrix,
    elementary_divisors,
    is_symplectic,
    rank,
    rational_nullspace,
    rational_rank,
    smith_normal_form,
    standard_symplectic_form,
    symmetric_signature,
    symplectic_inverse,
)


def _random_matrix(rng: random.Random, rows: int, cols: int, bound: int = 6) -> IntegerMatrix:
    return IntegerMatrix(rows, cols, tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))


def _sympy(m) -> sympy.Matrix:
    return sympy.Matrix(m.nrows, m.ncols, list(m.entries))


def _sign_changes(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _descartes_signature(q: IntegerMatrix) -> int:
    # a symmetric matrix has a real-rooted characteristic polynomial, so the
    # rule of signs counts positive and negative eigenvalues exactly
    coeffs = _sympy(q).charpoly().all_coeffs()
    degree = len(coeffs) - 1
    mirrored = [c * (-1) ** (degree - k) for k, c in enumerate(coeffs)]
    return _sign_changes(coeffs) - _sign_changes(mirrored)


def _random_unimodular(rng: random.Random, n: int) -> IntegerMatrix:
    m = IntegerMatrix.identity(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        rows = m.to_rows()
        factor = rng.randint(-2, 2)
        rows[i] = [a + factor * b for a, b in zip(rows[i], rows[j])]
        m = IntegerMatrix.from_rows(rows)
    return m


def test_matrix_construction():
    m = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    assert m.shape == (2, 2)
    assert m[1, 0] == 3
    assert m.transpose().row(0) == (1, 3)
    assert (m @ IntegerMatrix.identity(2)) == m

    with pytest.raises(DimensionMismatch):
        IntegerMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        IntegerMatrix(2, 2, (1, 2, 3))
    with pytest.raises(TypeError):
        IntegerMatrix(1, 1, (Fraction(1, 2),))
    with pytest.raises(TypeError):
        RationalMatrix(1, 1, (0.5,))


def test_smith_normal_form_of_known_matrix():
    m = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    d, u, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert [d[i, i] for i in range(3)] == [2, 6, 12]
    assert elementary_divisors(m) == [2, 6, 12]


def test_smith_normal_form_random_against_sympy():
    rng = random.Random(7)
    for _ in range(60):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        m = _random_matrix(rng, rows, cols)
        d, u, v = smith_normal_form(m)

        assert u @ m @ v == d
        assert abs(_sympy(u).det()) == 1
        assert abs(_sympy(v).det()) == 1
        for i in range(rows):
            for j in range(cols):
                if i != j:
                    assert d[i, j] == 0
        divisors = elementary_divisors(m)
        assert all(x > 0 for x in divisors)
        assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
        assert rank(m) == _sympy(m).rank() == rational_rank(m)
        if rows == cols and rank(m) == rows:
            product = 1
            for x in divisors:
                product *= x
            assert product == abs(_sympy(m).det())


def test_rank_of_empty_and_zero_matrices():
    assert rank(IntegerMatrix.zeros(3, 0)) == 0
    assert rank(IntegerMatrix.zeros(2, 2)) == 0
    assert elementary_divisors(IntegerMatrix.zeros(2, 3)) == []


def test_standard_symplectic_form():
    j = standard_symplectic_form(2)
    assert j[0, 1] == 1 and j[1, 0] == -1
    assert j[2, 3] == 1 and j[0, 3] == 0
    assert is_symplectic(IntegerMatrix.identity(4), 2)
    assert not is_symplectic(IntegerMatrix.from_rows([[2, 0], [0, 1]]), 1)
    with pytest.raises(DimensionMismatch):
        is_symplectic(IntegerMatrix.identity(3), 1)


def test_symplectic_inverse():
    m = IntegerMatrix.from_rows([[1, 1], [0, 1]])
    inv = symplectic_inverse(m, 1)
    assert m @ inv == IntegerMatrix.identity(2)


def test_rational_nullspace():
    m = IntegerMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    basis = rational_nullspace(m)
    assert len(basis) == 2
    for vec in basis:
        assert m.to_rational().apply(vec) == (0, 0)
    assert len(rational_nullspace(IntegerMatrix.zeros(2, 3))) == 3
    assert rational_nullspace(IntegerMatrix.zeros(2, 0)) == []


def test_rational_nullspace_random():
    rng = random.Random(131)
    for _ in range(100):
        rows, cols = rng.randint(1, 5), rng.randint(1, 6)
        m = _random_matrix(rng, rows, cols, bound=3)
        basis = rational_nullspace(m)
        assert len(basis) == cols - rank(m)
        q = m.to_rational()
        for vec in basis:
            assert q.apply(vec) == (0,) * rows


def test_symmetric_signature_known_forms():
    hyperbolic = IntegerMatrix.from_rows([[0, 1], [1, 0]])
    sig = symmetric_signature(hyperbolic)
    assert (sig.positive, sig.negative, sig.null) == (1, 1, 0)
    assert sig.value == 0

    degenerate = RationalMatrix.from_rows([[Fraction(1, 2), 0, 0], [0, 0, 0], [0, 0, -3]])
    sig = symmetric_signature(degenerate)
    assert (sig.positive, sig.negative, sig.null) == (1, 1, 1)
    assert sig.dimension == 3

    e8_like = IntegerMatrix.from_rows([[-2, 1], [1, -2]])
    assert symmetric_signature(e8_like).value == -2


def test_symmetric_signature_rejects_bad_input():
    with pytest.raises(NonSquare):
        symmetric_signature(IntegerMatrix.zeros(2, 3))
    with pytest.raises(NotSymmetric):
        symmetric_signature(IntegerMatrix.from_rows([[0, 1], [0, 0]]))

    sig = symmetric_signature(IntegerMatrix.from_rows([[1, 2], [0, 1]]), symmetrize=True)
    assert sig.symmetrized
    assert sig.dimension == 2


def test_signature_is_a_congruence_invariant():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 5)
        a = _random_matrix(rng, n, n, bound=4)
        q = a + a.transpose()
        p = _random_unimodular(rng, n)
        congruent = p.transpose() @ q @ p
        assert symmetric_signature(congruent) == symmetric_signature(q)

        assert symmetric_signature(q).value == _descartes_signature(q)
