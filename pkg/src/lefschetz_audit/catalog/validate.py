"""Consistency checks for catalog entries."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..errors import LefschetzAuditError
from ..fibration import ClosureVerdict, Factorization
from ..invariants import InvariantReport, compute_report, euler_number
from ..utils.logger import get_logger
from .registry import CatalogEntry

logger = get_logger(__name__)


@dataclass(frozen=True)
class Discrepancy:
    field: str
    expected: Any
    actual: Any
    message: str = ""

    def __str__(self) -> str:
        text = f"{self.field}: expected {self.expected}, got {self.actual}"
        return f"{text} ({self.message})" if self.message else text


def _report_values(rep: InvariantReport, g: int, h: int) -> Dict[str, Any]:
    values = rep.to_dict()
    values["g"], values["h"] = g, h
    if values.get("torsion") is not None:
        values["torsion"] = list(values["torsion"])
    if rep.hodge_pairing is not None:
        values["hodge_pairing"] = rep.hodge_pairing
    return values


def _same(expected: Any, actual: Any) -> bool:
    if isinstance(expected, list) or isinstance(actual, list):
        return list(expected or []) == list(actual or [])
    try:
        return Fraction(expected) == Fraction(actual)
    except (TypeError, ValueError):
        return expected == actual


def _against(expected: Dict[str, Any], f: Factorization) -> List[Discrepancy]:
    try:
        rep = compute_report(f)
    except LefschetzAuditError as e:
        return [Discrepancy("pipeline", "report", type(e).__name__, str(e))]
    actual = _report_values(rep, f.fiber_genus, f.base_genus)
    return [
        Discrepancy(key, value, actual.get(key))
        for key, value in expected.items()
        if not _same(value, actual.get(key))
    ]


def _from_identities(entry: CatalogEntry) -> List[Discrepancy]:
    """Close the expected fields under the defining identities and check them."""
    known = dict(entry.expected)
    out: List[Discrepancy] = []

    def settle(key: str, value: Any, why: str):
        if value is None:
            return
        if key in known:
            if not _same(known[key], value):
                out.append(Discrepancy(key, known[key], value, why))
        else:
            known[key] = value

    g, h = known.get("g"), known.get("h", 0)
    if g is None:
        return [Discrepancy("g", "a fiber genus", None, "invariant-only entries need g")]

    if "l" in known:
        settle("e", euler_number(g, h, known["l"]), "e = 4(g-1)(h-1) + l")
    elif "e" in known:
        settle("l", known["e"] - 4 * (g - 1) * (h - 1), "e = 4(g-1)(h-1) + l")
    if "n" in known and "s" in known:
        settle("l", known["n"] + known["s"], "l = n + s")

    if "sigma" not in known and "c1_squared" in known and "e" in known:
        numerator = known["c1_squared"] - 2 * known["e"]
        if numerator % 3:
            out.append(Discrepancy("sigma", "an integer", Fraction(numerator, 3), "σ = (c1² - 2e)/3"))
        else:
            known["sigma"] = numerator // 3
    if "sigma" in known and "e" in known:
        settle("c1_squared", 2 * known["e"] + 3 * known["sigma"], "c1² = 2e + 3σ")
    if "sigma" in known and "l" in known:
        settle("hodge_pairing", Fraction(known["l"] + known["sigma"], 4), "(l + σ)/4")
        if h == 0 and (known["sigma"] + known["l"]) % 4:
            out.append(Discrepancy("sigma", f"≡ -l (mod 4) with l = {known['l']}", known["sigma"], "parity"))

    if h == 0 and "b1" in known and "l" in known:
        settle("b2", known["l"] + 2 - 2 * (2 * g - known["b1"]), "l + 2 - b2 = 2(2g - b1)")
    if "b2" in known and "sigma" in known:
        b2, sigma = known["b2"], known["sigma"]
        if (b2 + sigma) % 2:
            out.append(Discrepancy("b2", "same parity as σ", b2, "b± must be integers"))
        else:
            settle("b_plus", (b2 + sigma) // 2, "b+ = (b2 + σ)/2")
            settle("b_minus", (b2 - sigma) // 2, "b- = (b2 - σ)/2")
    return out


def completed_expected(entry: CatalogEntry) -> Dict[str, Any]:
    """Expected fields plus everything the identities determine."""
    if entry.has_word:
        return dict(entry.expected)
    known = dict(entry.expected)
    g, h = known.get("g"), known.get("h", 0)
    if g is None:
        return known
    if "l" in known:
        known.setdefault("e", euler_number(g, h, known["l"]))
    if "sigma" not in known and {"c1_squared", "e"} <= set(known):
        numerator = known["c1_squared"] - 2 * known["e"]
        if numerator % 3 == 0:
            known["sigma"] = numerator // 3
    if {"sigma", "e"} <= set(known):
        known.setdefault("c1_squared", 2 * known["e"] + 3 * known["sigma"])
    if {"sigma", "l"} <= set(known):
        known.setdefault("hodge_pairing", Fraction(known["l"] + known["sigma"], 4))
    if h == 0 and {"b1", "l"} <= set(known):
        known.setdefault("b2", known["l"] + 2 - 2 * (2 * g - known["b1"]))
    if {"b2", "sigma"} <= set(known) and (known["b2"] + known["sigma"]) % 2 == 0:
        known.setdefault("b_plus", (known["b2"] + known["sigma"]) // 2)
        known.setdefault("b_minus", (known["b2"] - known["sigma"]) // 2)
    return known


def expected_report(entry: CatalogEntry) -> Optional[InvariantReport]:
    """InvariantReport assembled from an invariant-only entry, or None if l, n or s is missing."""
    known = completed_expected(entry)
    if not {"g", "l", "n", "s"} <= set(known):
        return None
    g, h = known["g"], known.get("h", 0)
    pairing = known.get("hodge_pairing")
    return InvariantReport(
        fiber_genus=g,
        base_genus=h,
        l=known["l"], n=known["n"], s=known["s"],
        e=known.get("e", euler_number(g, h, known["l"])),
        closure=ClosureVerdict.UNVERIFIED,
        b1=known.get("b1"),
        torsion=tuple(known["torsion"]) if "torsion" in known else None,
        b2=known.get("b2"),
        b_plus=known.get("b_plus"),
        b_minus=known.get("b_minus"),
        sigma=known.get("sigma"),
        c1_squared=known.get("c1_squared"),
        hodge_pairing=Fraction(pairing) if pairing is not None else None,
        name=entry.name,
    )


def validate_entry(entry: CatalogEntry, factorization: Optional[Factorization] = None) -> List[Discrepancy]:
    """
    Compare an entry's expected invariants with what its data implies.

    With a word the full pipeline is run and compared field by field;
    without one the expected fields are checked against each other.

    Args:
        entry: Catalog entry
        factorization: Candidate word for the entry; its report is compared
            with the expected fields completed under the identities

    Returns:
        Discrepancies; empty when consistent
    """
    if factorization is not None:
        found = _against(completed_expected(entry), factorization)
    elif entry.has_word:
        found = _against(entry.expected, entry.factorization)
    else:
        found = _from_identities(entry)
    logger.info("catalog_entry_validated", name=entry.name, discrepancies=len(found),
                candidate=factorization.name if factorization is not None else None)
    return found
