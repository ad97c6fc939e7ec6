"""Tests for the built-in catalog and fiber sums."""

import pytest

from lefschetz_audit.catalog import (
    catalog,
    completed_expected,
    expected_report,
    export_entry,
    fiber_sum,
    lookup,
    validate_entry,
)
from lefschetz_audit.catalog.registry import DOCUMENTS_DIR
from lefschetz_audit.checks import run_checks
from lefschetz_audit.errors import GenusMismatch, NotClosed, NotFound, WrongBaseGenus
from lefschetz_audit.fibration import ClosureVerdict, Factorization, verify_closure
from lefschetz_audit.invariants import compute_report
from lefschetz_audit.parsers import parse_text
from lefschetz_audit.signature import elliptic_factorization
from lefschetz_audit.surface import Curve

from conftest import separating_word


def test_catalog_contents():
    names = [e.name for e in catalog()]
    assert names[:3] == ["E1", "E2", "E3"]
    assert "MATSUMOTO_G2" in names
    assert sum(1 for n in names if n.startswith("K3_PENCIL_")) == 4
    assert lookup("E2").has_word
    assert not lookup("MATSUMOTO_G2").has_word
    assert lookup("MATSUMOTO_G2").fiber_genus == 2
    with pytest.raises(NotFound):
        lookup("E9")


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_every_entry_validates(entry):
    assert validate_entry(entry) == []


@pytest.mark.parametrize("entry", catalog(), ids=lambda e: e.name)
def test_every_entry_passes_the_suite(entry):
    rep = compute_report(entry.factorization) if entry.has_word else expected_report(entry)
    results = run_checks(rep, rep.fiber_genus, rep.base_genus, entry.flags)
    assert [r.check_id for r in results if r.failed] == []


@pytest.mark.parametrize("entry", [e for e in catalog() if not e.has_word], ids=lambda e: e.name)
def test_invariant_only_fields_have_provenance(entry):
    untagged = set(entry.expected) - set(entry.provenance) - {"g", "h"}
    assert untagged == set()
    assert all(tag.startswith(("[LITERATURE]", "[DERIVED]")) for tag in entry.provenance.values())


def test_discrepancies_are_reported():
    wrong = lookup("E1").with_expected(sigma=-7)
    found = validate_entry(wrong)
    assert [d.field for d in found] == ["sigma"]
    assert found[0].expected == -7 and found[0].actual == -8

    wrong = lookup("MATSUMOTO_G2").with_expected(c1_squared=-3)
    assert "c1_squared" in {d.field for d in validate_entry(wrong)}


def test_candidate_word_against_invariant_only_entry(e1):
    found = {d.field: d for d in validate_entry(lookup("MATSUMOTO_G2"), factorization=separating_word(8))}
    assert (found["b1"].expected, found["b1"].actual) == (2, 4)
    assert {"n", "s", "sigma"} <= set(found)
    assert "l" not in found

    assert validate_entry(lookup("E1"), factorization=e1) == []


def test_expected_report_for_invariant_only_entry():
    rep = expected_report(lookup("MATSUMOTO_G2"))
    assert rep.closure is ClosureVerdict.UNVERIFIED
    assert (rep.l, rep.n, rep.s, rep.sigma, rep.c1_squared) == (8, 6, 2, -4, -4)
    assert rep.hodge_pairing == 1

    completed = completed_expected(lookup("K3_PENCIL_1"))
    assert completed["hodge_pairing"] == 3


def test_export(e1):
    text = export_entry("E1", "dsl")
    assert text == (DOCUMENTS_DIR / "E1.lf").read_text(encoding="utf-8")
    assert parse_text(export_entry("E1", "json"), fmt="json") == lookup("E1").factorization
    assert parse_text(text).word == e1.word
    with pytest.raises(NotFound):
        export_entry("MATSUMOTO_G2")


def test_fiber_sum_of_elliptic_surfaces(e1):
    total = fiber_sum(e1, e1)
    assert total.name == "E1+E1"
    assert total.curves == e1.curves
    assert total.length == 24
    rep = compute_report(total)
    assert rep.sigma == -16
    assert rep.b2 == compute_report(elliptic_factorization(2)).b2


def test_fiber_sum_of_e1_and_e2(e1, e2):
    rep = compute_report(fiber_sum(e1, e2))
    assert rep.l == 36
    assert rep.sigma == -24


@pytest.mark.parametrize("g, m1, m2", [(1, 0, 0), (2, 3, 5), (3, 2, 4), (4, 1, 1)])
def test_fiber_sum_defect(e1, g, m1, m2):
    f1, f2 = (e1, e1) if g == 1 else (separating_word(m1, g), separating_word(m2, g))
    r1, r2 = compute_report(f1), compute_report(f2)
    total = compute_report(fiber_sum(f1, f2))
    assert total.e == r1.e + r2.e + 4 * (g - 1)
    assert total.sigma == r1.sigma + r2.sigma
    assert total.c1_squared == r1.c1_squared + r2.c1_squared + 8 * (g - 1)


def test_fiber_sum_renames_colliding_curves(e1):
    swapped = Factorization(
        "swapped", 1, 0,
        (("a", Curve.nonseparating((0, 1))), ("b", Curve.nonseparating((1, 0)))),
        ("a", "b") * 6,
    )
    total = fiber_sum(e1, swapped, name="mixed")
    assert [name for name, _ in total.curves] == ["a", "b", "a_2", "b_2"]
    assert total.word[12:14] == ("a_2", "b_2")
    assert verify_closure(total) is ClosureVerdict.CLOSED
    assert compute_report(total).sigma == -16


def test_fiber_sum_preconditions(e1):
    with pytest.raises(GenusMismatch):
        fiber_sum(e1, separating_word(2))
    with pytest.raises(WrongBaseGenus):
        fiber_sum(e1, Factorization("t", 1, 1, e1.curves, e1.word))
    with pytest.raises(NotClosed):
        fiber_sum(e1, Factorization("open", 1, 0, e1.curves, e1.word[:3]))
