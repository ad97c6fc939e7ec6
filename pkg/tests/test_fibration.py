"""Tests for factorizations, closure verdicts and ground-truth flags."""

import pytest

from lefschetz_audit.errors import DimensionMismatch, InconsistentInput, InvalidCurve
from lefschetz_audit.fibration import (
    ClosureVerdict,
    Factorization,
    GroundTruthFlags,
    Tristate,
    counts,
    monodromy_product,
    verify_closure,
)
from lefschetz_audit.surface import Curve, SymplecticMatrix, transvection

from conftest import separating_word

TORUS_CURVES = (("a", Curve.nonseparating((1, 0))), ("b", Curve.nonseparating((0, 1))))


def test_elliptic_word_is_closed(e1, e2):
    assert verify_closure(e1) is ClosureVerdict.CLOSED
    assert verify_closure(e2) is ClosureVerdict.CLOSED
    assert monodromy_product(e1).is_identity()


def test_short_word_is_violated():
    f = Factorization("open", 1, 0, TORUS_CURVES, ("a", "b") * 5)
    assert verify_closure(f) is ClosureVerdict.VIOLATED
    assert not ClosureVerdict.VIOLATED.is_closed


def test_monodromy_composes_right_to_left():
    f = Factorization("ab", 1, 0, TORUS_CURVES, ("a", "b"))
    t_a = transvection(TORUS_CURVES[0][1], 1)
    t_b = transvection(TORUS_CURVES[1][1], 1)
    assert monodromy_product(f) == t_b @ t_a


def test_closure_is_invariant_under_rotation(e1):
    for k in range(e1.length):
        assert verify_closure(e1.rotated(k)) is ClosureVerdict.CLOSED
    open_word = Factorization("open", 1, 0, TORUS_CURVES, ("a", "a", "b"))
    for k in range(3):
        assert verify_closure(open_word.rotated(k)) is ClosureVerdict.VIOLATED


def test_counts():
    f = Factorization(
        "mixed", 2, 0,
        (("x", Curve.nonseparating((1, 0, 0, 0))), ("c", Curve.separating(1))),
        ("x", "c", "c", "x", "x"),
    )
    c = counts(f)
    assert (c.l, c.n, c.s) == (5, 3, 2)
    assert counts(separating_word(4)).s == 4


def test_positive_genus_base_verdicts(e1):
    unverified = Factorization("over_torus", 1, 1, e1.curves, e1.word)
    assert verify_closure(unverified) is ClosureVerdict.UNVERIFIED

    identity = SymplecticMatrix.identity(1)
    with_handles = Factorization("over_torus", 1, 1, e1.curves, e1.word,
                                 handle_monodromies=(identity, identity))
    assert verify_closure(with_handles) is ClosureVerdict.CLOSED_UP_TO_COMMUTATORS
    assert ClosureVerdict.CLOSED_UP_TO_COMMUTATORS.is_closed

    t_a = transvection(TORUS_CURVES[0][1], 1)
    t_b = transvection(TORUS_CURVES[1][1], 1)
    mismatched = Factorization("over_torus", 1, 1, e1.curves, e1.word,
                               handle_monodromies=(t_a, t_b))
    assert verify_closure(mismatched) is ClosureVerdict.VIOLATED


def test_factorization_validation():
    with pytest.raises(InvalidCurve, match="duplicate"):
        Factorization("dup", 1, 0, TORUS_CURVES + (("a", Curve.nonseparating((1, 1))),), ("a",))
    with pytest.raises(InvalidCurve, match="at least one"):
        Factorization("empty", 1, 0, TORUS_CURVES, ())
    with pytest.raises(InvalidCurve, match="undeclared"):
        Factorization("undeclared", 1, 0, TORUS_CURVES, ("a", "z"))
    with pytest.raises(InvalidCurve):
        Factorization("bad", 2, 0, TORUS_CURVES, ("a",))
    with pytest.raises(DimensionMismatch):
        Factorization("neg", -1, 0, (), ("a",))
    with pytest.raises(DimensionMismatch):
        Factorization("handles", 1, 0, TORUS_CURVES, ("a",),
                      handle_monodromies=(SymplecticMatrix.identity(1),) * 2)
    with pytest.raises(DimensionMismatch, match="expected 2"):
        Factorization("handles", 1, 1, TORUS_CURVES, ("a",),
                      handle_monodromies=(SymplecticMatrix.identity(1),))


def test_flags_coercion_and_consistency():
    flags = GroundTruthFlags(rational_or_ruled=True, ruled_base_genus=1)
    assert flags.rational_or_ruled is Tristate.TRUE
    assert flags.to_mapping() == {"rational_or_ruled": "true", "ruled_base_genus": 1}
    assert flags.to_document() == {"rational_or_ruled": "true", "ruling_base_genus": 1}
    assert GroundTruthFlags.from_mapping(flags.to_document()) == flags

    with pytest.raises(InconsistentInput):
        GroundTruthFlags(ruled_base_genus=0)
    with pytest.raises(InconsistentInput):
        GroundTruthFlags(rational_or_ruled="false", blowup_of_sphere_bundle="true")
    with pytest.raises(InconsistentInput):
        GroundTruthFlags(kodaira_dimension="3")
    with pytest.raises(InconsistentInput, match="unknown flag"):
        GroundTruthFlags.from_mapping({"colour": "true"})


def test_flags_override():
    base = GroundTruthFlags(rational_or_ruled="false", kodaira_dimension="0")
    merged = base.overridden_by(GroundTruthFlags(kodaira_dimension="1"))
    assert merged.rational_or_ruled is Tristate.FALSE
    assert merged.kodaira_dimension == "1"
