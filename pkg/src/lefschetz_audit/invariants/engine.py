"""Numerical invariants of the total space of a Lefschetz fibration."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..errors import NotClosed, ParityError, WrongBaseGenus
from ..fibration import CONVENTION, ClosureVerdict, Factorization, counts, verify_closure
from ..linalg import IntegerMatrix, elementary_divisors
from ..signature import sigma_over_sphere
from ..utils.logger import get_logger

logger = get_logger(__name__)

REPORT_FIELDS = (
    "l", "n", "s", "e", "b1", "torsion", "b2", "b_plus", "b_minus",
    "sigma", "c1_squared", "hodge_pairing", "closure", "convention",
)


@dataclass(frozen=True)
class HomologySummary:
    b1: int
    torsion: Tuple[int, ...]
    b2: int
    b_plus: int
    b_minus: int


@dataclass(frozen=True)
class InvariantReport:
    """Invariants of one factorization.

    Over a positive-genus base the Betti numbers are None, and so are
    sigma, c1_squared and hodge_pairing unless the caller supplied σ.
    """
    fiber_genus: int
    base_genus: int
    l: int  # noqa: E741
    n: int
    s: int
    e: int
    closure: ClosureVerdict
    b1: Optional[int] = None
    torsion: Optional[Tuple[int, ...]] = None
    b2: Optional[int] = None
    b_plus: Optional[int] = None
    b_minus: Optional[int] = None
    sigma: Optional[int] = None
    c1_squared: Optional[int] = None
    hodge_pairing: Optional[Fraction] = None
    convention: str = CONVENTION
    name: str = field(default="", compare=False)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready mapping with the fixed report field names."""
        out: Dict[str, Any] = {}
        for key in REPORT_FIELDS:
            value = getattr(self, key)
            if key == "torsion" and value is not None:
                value = list(value)
            elif key == "hodge_pairing" and value is not None:
                value = value.numerator if value.denominator == 1 else str(value)
            elif key == "closure":
                value = value.value
            out[key] = value
        return out


def euler_number(g: int, h: int, l: int) -> int:  # noqa: E741
    """e = 4(g-1)(h-1) + l"""
    return 4 * (g - 1) * (h - 1) + l


def chern_square(e: int, sigma: int) -> int:
    """c1² = 2e + 3σ"""
    return 2 * e + 3 * sigma


def hodge_pairing(l: int, sigma: int) -> Fraction:  # noqa: E741
    """Degree of the Hodge bundle on the base, (l + σ)/4."""
    return Fraction(l + sigma, 4)


def ruled_mu(h: int) -> int:
    """Lowest fiber genus of a fibration over S² on a blown-up ruled surface over a genus-h curve."""
    if h < 0:
        raise ValueError(f"base genus must be nonnegative, got {h}")
    return 2 * h


def vanishing_class_matrix(f: Factorization) -> IntegerMatrix:
    """2g x k matrix whose columns are the distinct non-separating classes in the word."""
    curves = f.curve_map
    columns: List[Tuple[int, ...]] = []
    for letter in dict.fromkeys(f.word):
        curve = curves[letter]
        if not curve.is_separating and curve.homology_class.coords not in columns:
            columns.append(curve.homology_class.coords)
    n = 2 * f.fiber_genus
    if not columns:
        return IntegerMatrix.zeros(n, 0)
    return IntegerMatrix.from_rows(columns).transpose()


def homology_over_sphere(f: Factorization,
                         sigma: Optional[int] = None,
                         verdict: Optional[ClosureVerdict] = None) -> HomologySummary:
    """
    Betti numbers and H1 torsion of a fibration over the sphere.

    H1 of the total space is Z^{2g} modulo the vanishing classes; b2 comes
    from e = 2 - 2 b1 + b2.

    Args:
        f: Factorization with base genus 0
        sigma: Signature if already known, otherwise computed
        verdict: Closure verdict if already known

    Returns:
        HomologySummary

    Raises:
        WrongBaseGenus: base genus is not 0
        NotClosed: the word is not closed
        ParityError: b2 + σ is odd
    """
    if f.base_genus != 0:
        raise WrongBaseGenus(f"Betti numbers are only derived over the sphere, base genus is {f.base_genus}")
    verdict = verdict or verify_closure(f)
    if verdict is not ClosureVerdict.CLOSED:
        raise NotClosed(f"factorization '{f.name}' is not closed: {verdict.value}")
    if sigma is None:
        sigma = sigma_over_sphere(f, verdict=verdict).total

    g = f.fiber_genus
    divisors = elementary_divisors(vanishing_class_matrix(f)) if g else []
    b1 = 2 * g - len(divisors)
    torsion = tuple(abs(d) for d in divisors if abs(d) > 1)
    b2 = f.length + 2 - 2 * (2 * g - b1)
    if (b2 + sigma) % 2:
        raise ParityError(f"b2 + sigma = {b2} + {sigma} is odd")
    return HomologySummary(
        b1=b1,
        torsion=torsion,
        b2=b2,
        b_plus=(b2 + sigma) // 2,
        b_minus=(b2 - sigma) // 2,
    )


def invariants_over_base(f: Factorization, sigma: Optional[int] = None) -> InvariantReport:
    """Counts and e for any base; c1² and the Hodge pairing when σ is supplied."""
    c = counts(f)
    e = euler_number(f.fiber_genus, f.base_genus, c.l)
    verdict = verify_closure(f)
    return InvariantReport(
        fiber_genus=f.fiber_genus,
        base_genus=f.base_genus,
        l=c.l, n=c.n, s=c.s, e=e,
        closure=verdict,
        sigma=sigma,
        c1_squared=chern_square(e, sigma) if sigma is not None else None,
        hodge_pairing=hodge_pairing(c.l, sigma) if sigma is not None else None,
        convention=f.convention,
        name=f.name,
    )


def compute_report(f: Factorization, sigma: Optional[int] = None, workers: int = 1) -> InvariantReport:
    """
    Full invariant pipeline.

    Over the sphere: closure, counts, e, H1, σ, b±, c1² and the pairing.
    Over a positive-genus base, or for a word whose monodromy is not the
    identity, this is ``invariants_over_base``: counts, e and the closure
    verdict, with every σ-dependent field left empty.

    Args:
        f: Factorization
        sigma: Caller-supplied σ, only used over a positive-genus base
        workers: Threads for the cocycle terms

    Returns:
        InvariantReport
    """
    if f.base_genus > 0:
        return invariants_over_base(f, sigma)
    verdict = verify_closure(f)
    if verdict is ClosureVerdict.VIOLATED:
        # counts and e only; the report carries the verdict for negative tests
        logger.warning("report_for_open_word", name=f.name)
        return invariants_over_base(f)
    c = counts(f)
    e = euler_number(f.fiber_genus, 0, c.l)
    total = sigma_over_sphere(f, workers=workers, verdict=verdict).total
    hom = homology_over_sphere(f, sigma=total, verdict=verdict)
    report = InvariantReport(
        fiber_genus=f.fiber_genus,
        base_genus=0,
        l=c.l, n=c.n, s=c.s, e=e,
        closure=verdict,
        b1=hom.b1,
        torsion=hom.torsion,
        b2=hom.b2,
        b_plus=hom.b_plus,
        b_minus=hom.b_minus,
        sigma=total,
        c1_squared=chern_square(e, total),
        hodge_pairing=hodge_pairing(c.l, total),
        convention=f.convention,
        name=f.name,
    )
    logger.info("invariants_computed", name=f.name, l=c.l, sigma=total, b2=hom.b2)
    return report
