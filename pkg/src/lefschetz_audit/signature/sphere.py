"""Signature of a Lefschetz fibration over the sphere."""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..errors import NotClosed, WrongBaseGenus
from ..fibration import ClosureVerdict, Factorization, counts, verify_closure
from ..utils.logger import get_logger
from .calibration import sign_convention
from .meyer import cocycle_terms

logger = get_logger(__name__)


@dataclass(frozen=True)
class SignatureBreakdown:
    """σ = sign_convention · Σ cocycle_terms + separating_correction."""
    cocycle_terms: Tuple[int, ...]
    separating_correction: int
    total: int
    sign_convention: int
    symmetrized: bool = False


def sigma_over_sphere(f: Factorization,
                      workers: int = 1,
                      verdict: Optional[ClosureVerdict] = None) -> SignatureBreakdown:
    """
    Signature of the total space from the Meyer cocycle along the word.

    Each separating twist adds -1 and nothing to the cocycle sum.

    Args:
        f: Factorization over the sphere
        workers: Threads used for the cocycle terms
        verdict: Closure verdict if the caller already has it

    Returns:
        SignatureBreakdown

    Raises:
        WrongBaseGenus: base genus is not 0
        NotClosed: the word does not multiply to the identity in homology
    """
    if f.base_genus != 0:
        raise WrongBaseGenus(f"signature is only computed over the sphere, base genus is {f.base_genus}")
    verdict = verdict or verify_closure(f)
    if verdict is not ClosureVerdict.CLOSED:
        raise NotClosed(f"factorization '{f.name}' is not closed: {verdict.value}")

    sign = sign_convention()
    computed = cocycle_terms(f, workers=workers)
    correction = -counts(f).s
    total = sign * sum(computed.terms) + correction
    logger.debug("signature_computed", name=f.name, total=total, correction=correction)
    return SignatureBreakdown(
        cocycle_terms=computed.terms,
        separating_correction=correction,
        total=total,
        sign_convention=sign,
        symmetrized=computed.symmetrized,
    )
