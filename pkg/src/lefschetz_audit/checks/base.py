"""Check results and the base class every registered check derives from."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

from ..fibration import GroundTruthFlags, Tristate
from ..invariants import InvariantReport, KodairaDim

# Kodaira dimensions are ordered, not summed as numbers
Value = Union[Fraction, KodairaDim]

HYPOTHESIS_UNKNOWN = "hypothesis unknown"

_RELATIONS = {
    "≥": lambda a, b: a >= b,
    "≤": lambda a, b: a <= b,
    "=": lambda a, b: a == b,
    "≠": lambda a, b: a != b,
}


def _exact(value: Any) -> Fraction:
    if isinstance(value, float):
        raise TypeError("checks compare exact values only")
    return Fraction(value)


def render_value(value: Optional[Value]) -> str:
    if value is None:
        return "-"
    return str(value)


def json_value(value: Optional[Value]) -> Any:
    if value is None:
        return None
    if isinstance(value, KodairaDim):
        return value.value
    return value.numerator if value.denominator == 1 else str(value)


@dataclass(frozen=True)
class Clause:
    """One evaluated sub-inequality."""
    label: str
    lhs: Value
    relation: str
    rhs: Value
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "lhs": json_value(self.lhs),
            "relation": self.relation,
            "rhs": json_value(self.rhs),
            "holds": self.holds,
        }


def compare(label: str, lhs: Any, relation: str, rhs: Any) -> Clause:
    """Evaluate ``lhs relation rhs`` exactly."""
    a, b = _exact(lhs), _exact(rhs)
    return Clause(label, a, relation, b, _RELATIONS[relation](a, b))


def congruent(label: str, lhs: int, rhs: int, modulus: int) -> Clause:
    return Clause(label, Fraction(lhs), f"≡ (mod {modulus})", Fraction(rhs), (lhs - rhs) % modulus == 0)


def equivalent(label: str, left: bool, right: bool) -> Clause:
    """Both statements true or both false; lhs/rhs record them as 1/0."""
    return Clause(label, Fraction(int(left)), "⟺", Fraction(int(right)), left == right)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check; ``holds`` is None exactly when not applicable."""
    check_id: str
    citation: str
    applicable: bool
    reason: str = ""
    holds: Optional[bool] = None
    lhs: Optional[Value] = None
    rhs: Optional[Value] = None
    relation: str = ""
    note: str = ""
    informational: bool = False
    clauses: Tuple[Clause, ...] = field(default_factory=tuple)

    @property
    def failed(self) -> bool:
        """A violation that should change the exit code."""
        return self.applicable and self.holds is False and not self.informational

    @property
    def status(self) -> str:
        if not self.applicable:
            return "N/A"
        return "PASS" if self.holds else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check_id": self.check_id,
            "citation": self.citation,
            "applicable": self.applicable,
            "reason": self.reason,
            "holds": self.holds,
            "lhs": json_value(self.lhs),
            "rhs": json_value(self.rhs),
            "relation": self.relation,
            "note": self.note,
            "informational": self.informational,
            "clauses": [c.to_dict() for c in self.clauses],
        }


@dataclass(frozen=True)
class CheckContext:
    report: InvariantReport
    g: int
    h: int
    flags: GroundTruthFlags

    @property
    def over_sphere(self) -> bool:
        return self.h == 0

    @property
    def has_sigma(self) -> bool:
        return self.report.sigma is not None

    @property
    def has_betti(self) -> bool:
        return self.report.b2 is not None


class Inapplicable(Exception):
    """Raised from ``evaluate`` when a premise turns out to be false."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class InequalityCheck(ABC):
    """One audited statement.

    Subclasses set ``citation``, optionally ``informational``, and implement
    ``applicability`` and ``evaluate``. ``check_id`` is set by
    ``register_check``.
    """

    check_id: str = ""
    citation: str = ""
    informational: bool = False

    def applicability(self, ctx: CheckContext) -> Optional[str]:
        """Reason the check does not apply, or None when it does."""
        return None

    @abstractmethod
    def evaluate(self, ctx: CheckContext) -> List[Clause]:
        """Evaluate every clause; the first clause is the headline comparison."""

    def note(self, ctx: CheckContext) -> str:
        return ""

    def run(self, ctx: CheckContext) -> CheckResult:
        reason = self.applicability(ctx)
        if reason is None:
            try:
                clauses = self.evaluate(ctx)
            except Inapplicable as e:
                reason = e.reason
        if reason is not None:
            return CheckResult(
                check_id=self.check_id,
                citation=self.citation,
                applicable=False,
                reason=reason,
                informational=self.informational,
            )
        head = clauses[0]
        return CheckResult(
            check_id=self.check_id,
            citation=self.citation,
            applicable=True,
            holds=all(c.holds for c in clauses),
            lhs=head.lhs,
            rhs=head.rhs,
            relation=head.relation,
            note=self.note(ctx),
            informational=self.informational,
            clauses=tuple(clauses),
        )


# Applicability helpers shared by the check modules

def needs_sphere(ctx: CheckContext) -> Optional[str]:
    return None if ctx.over_sphere else "requires base genus 0"


def needs_sigma(ctx: CheckContext) -> Optional[str]:
    return None if ctx.has_sigma else "signature unknown"


def needs_flag(value: Tristate, wanted: Tristate, label: str) -> Optional[str]:
    if value is Tristate.UNKNOWN:
        return HYPOTHESIS_UNKNOWN
    if value is not wanted:
        return f"hypothesis not met: {label} is {value.value}"
    return None


def first_reason(*reasons: Optional[str]) -> Optional[str]:
    return next((r for r in reasons if r is not None), None)
