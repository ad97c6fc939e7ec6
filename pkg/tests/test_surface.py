"""Tests for homology classes, curves and twist matrices."""

import pytest

from lefschetz_audit.errors import DimensionMismatch, InvalidCurve
from lefschetz_audit.linalg import IntegerMatrix, is_symplectic
from lefschetz_audit.surface import (
    Curve,
    HomologyClass,
    SymplecticMatrix,
    commutator,
    is_primitive,
    pairing,
    transvection,
)

from conftest import random_primitive


def test_pairing_in_standard_basis():
    a1, b1 = HomologyClass.basis(2, 0), HomologyClass.basis(2, 1)
    a2, b2 = HomologyClass.basis(2, 2), HomologyClass.basis(2, 3)
    assert pairing(a1, b1, 2) == 1
    assert pairing(b1, a1, 2) == -1
    assert pairing(a1, a2, 2) == 0
    assert pairing(a2, b2, 2) == 1
    assert pairing(a1 + a2, b1 + b2, 2) == 2
    with pytest.raises(DimensionMismatch):
        pairing(a1, HomologyClass.basis(1, 0), 2)


def test_homology_class_arity():
    with pytest.raises(DimensionMismatch):
        HomologyClass((1, 0, 0))
    assert HomologyClass.zero(2).is_zero()
    assert str(HomologyClass((1, -2))) == "(1,-2)"


def test_primitivity():
    assert is_primitive(HomologyClass((1, 0)))
    assert is_primitive(HomologyClass((2, 3, 0, 0)))
    assert not is_primitive(HomologyClass((2, 0)))
    assert not is_primitive(HomologyClass((0, 0)))


def test_curve_validation():
    assert Curve.nonseparating((1, 0)).validate(1)
    with pytest.raises(InvalidCurve, match="not primitive"):
        Curve.nonseparating((2, 0)).validate(1)
    with pytest.raises(InvalidCurve, match="coordinates"):
        Curve.nonseparating((1, 0)).validate(2)
    with pytest.raises(InvalidCurve, match="side genus"):
        Curve.separating(2).validate(2)
    with pytest.raises(InvalidCurve, match="genus at least 2"):
        Curve.separating(1).validate(1)
    assert Curve.separating(1).homology(2).is_zero()


def test_transvection_acts_on_columns():
    t_a = transvection(Curve.nonseparating((1, 0)), 1)
    t_b = transvection(Curve.nonseparating((0, 1)), 1)
    # x -> x + <x, v> v
    assert t_a.m.apply((1, 0)) == (1, 0)
    assert t_a.m.apply((0, 1)) == (-1, 1)
    assert t_b.m.apply((1, 0)) == (1, 1)
    assert t_a.m == IntegerMatrix.from_rows([[1, -1], [0, 1]])
    assert t_b.m == IntegerMatrix.from_rows([[1, 0], [1, 1]])


def test_transvection_matches_formula(rng):
    for g in (1, 2, 3):
        for _ in range(20):
            curve = random_primitive(rng, g)
            v = curve.homology_class
            t = transvection(curve, g)
            x = random_primitive(rng, g).homology_class
            expected = tuple(xi + pairing(x, v, g) * vi for xi, vi in zip(x.coords, v.coords))
            assert t.m.apply(x.coords) == expected
            assert is_symplectic(t.m, g)


def test_separating_twist_is_identity():
    assert transvection(Curve.separating(1), 2).is_identity()


def test_elliptic_relations():
    t_a = transvection(Curve.nonseparating((1, 0)), 1)
    t_b = transvection(Curve.nonseparating((0, 1)), 1)
    braid_left = t_a @ t_b @ t_a
    assert braid_left == t_b @ t_a @ t_b
    assert braid_left.power(4).is_identity()
    assert (t_b @ t_a).power(6).is_identity()
    assert not (t_b @ t_a).power(3).is_identity()
    assert (t_a @ t_a.inverse()).is_identity()
    assert t_a.power(-2) == t_a.inverse() @ t_a.inverse()


def test_symplectic_matrix_rejects_non_symplectic():
    with pytest.raises(DimensionMismatch):
        SymplecticMatrix(1, IntegerMatrix.from_rows([[2, 0], [0, 1]]))


def test_commutator_and_conjugation():
    t_a = transvection(Curve.nonseparating((1, 0, 0, 0)), 2)
    t_c = transvection(Curve.nonseparating((0, 0, 1, 0)), 2)
    t_b = transvection(Curve.nonseparating((0, 1, 0, 0)), 2)
    assert commutator(t_a, t_c).is_identity()
    assert not commutator(t_a, t_b).is_identity()
    assert t_a.conjugate(t_b).conjugate(t_b.inverse()) == t_a


def test_transvection_is_unipotent_and_ignores_orientation(rng):
    for g in (1, 2, 3):
        for _ in range(30):
            curve = random_primitive(rng, g)
            t = transvection(curve, g)
            n = t.m - IntegerMatrix.identity(2 * g)
            assert (n @ n).is_zero()
            reversed_curve = Curve.nonseparating((-curve.homology_class).coords)
            assert transvection(reversed_curve, g) == t
