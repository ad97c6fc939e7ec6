"""Tests for the Meyer cocycle and the signature over the sphere."""

import random

import pytest

from lefschetz_audit.errors import CalibrationError, DimensionMismatch, NotClosed, WrongBaseGenus
from lefschetz_audit.fibration import Factorization
from lefschetz_audit.signature import (
    ELLIPTIC_SIGNATURES,
    cocycle_terms,
    elliptic_factorization,
    meyer_cocycle,
    meyer_form,
    sigma_over_sphere,
    sign_convention,
)
from lefschetz_audit.surface import SymplecticMatrix, transvection

from conftest import random_primitive, separating_word


def _random_element(rng: random.Random, g: int, length: int = 4) -> SymplecticMatrix:
    m = SymplecticMatrix.identity(g)
    for _ in range(rng.randint(1, length)):
        t = transvection(random_primitive(rng, g, bound=2), g)
        m = m @ (t if rng.random() < 0.6 else t.inverse())
    return m


def test_sign_convention_reproduces_anchors():
    assert sign_convention() in (1, -1)
    for k, expected in ELLIPTIC_SIGNATURES.items():
        assert sigma_over_sphere(elliptic_factorization(k)).total == expected


@pytest.mark.parametrize("k", [1, 2, 3])
def test_elliptic_surfaces(k):
    breakdown = sigma_over_sphere(elliptic_factorization(k))
    assert breakdown.total == -8 * k
    assert breakdown.separating_correction == 0
    assert len(breakdown.cocycle_terms) == 12 * k - 1


def test_signature_is_invariant_under_rotation(e1):
    for k in (1, 5, 7):
        assert sigma_over_sphere(e1.rotated(k)).total == -8


def test_separating_twists_contribute_minus_one():
    for m in range(1, 7):
        breakdown = sigma_over_sphere(separating_word(m))
        assert set(breakdown.cocycle_terms) <= {0}
        assert breakdown.separating_correction == -m
        assert breakdown.total == -m


def test_workers_do_not_change_terms(e2):
    assert cocycle_terms(e2, workers=4) == cocycle_terms(e2, workers=1)
    assert sigma_over_sphere(e2, workers=3).total == -16


def test_preconditions(e1):
    over_torus = Factorization("t", 1, 1, e1.curves, e1.word)
    with pytest.raises(WrongBaseGenus):
        sigma_over_sphere(over_torus)
    open_word = Factorization("open", 1, 0, e1.curves, e1.word[:-1])
    with pytest.raises(NotClosed):
        sigma_over_sphere(open_word)
    with pytest.raises(DimensionMismatch):
        meyer_cocycle(SymplecticMatrix.identity(1), SymplecticMatrix.identity(2))


def test_meyer_form_dimension():
    t = transvection(random_primitive(random.Random(1), 2), 2)
    form = meyer_form(t, t)
    assert form.gram.shape == (form.dimension, form.dimension)
    assert form.dimension == len(form.basis)


def test_cocycle_basic_identities(rng):
    for g in (1, 2):
        for _ in range(40):
            a = _random_element(rng, g)
            b = _random_element(rng, g)
            identity = SymplecticMatrix.identity(g)
            assert meyer_cocycle(a, identity) == 0
            assert meyer_cocycle(identity, b) == 0
            assert meyer_cocycle(a, b) == meyer_cocycle(b, a)
            assert meyer_cocycle(a, a.inverse()) == 0


def test_cocycle_condition(rng):
    for index in range(200):
        g = 1 if index < 120 else 2
        a, b, c = (_random_element(rng, g) for _ in range(3))
        lhs = meyer_cocycle(a, b) + meyer_cocycle(a @ b, c)
        rhs = meyer_cocycle(a, b @ c) + meyer_cocycle(b, c)
        assert lhs == rhs


def test_cocycle_conjugation_invariance(rng):
    for index in range(200):
        g = 1 if index < 120 else 2
        a, b, c = (_random_element(rng, g) for _ in range(3))
        assert meyer_cocycle(a.conjugate(c), b.conjugate(c)) == meyer_cocycle(a, b)


@pytest.fixture
def fresh_calibration():
    sign_convention.cache_clear()
    yield
    sign_convention.cache_clear()


@pytest.mark.parametrize("k, wrong", [(1, -9), (2, -15)])
def test_calibration_failure_names_the_open_question(monkeypatch, fresh_calibration, k, wrong):
    monkeypatch.setitem(ELLIPTIC_SIGNATURES, k, wrong)
    with pytest.raises(CalibrationError, match="open question"):
        sign_convention()
