"""Signature of the total space via Meyer's cocycle."""

from .calibration import ELLIPTIC_SIGNATURES, elliptic_factorization, sign_convention
from .meyer import CocycleTerms, MeyerForm, cocycle_terms, meyer_cocycle, meyer_form
from .sphere import SignatureBreakdown, sigma_over_sphere

__all__ = [
    "ELLIPTIC_SIGNATURES",
    "CocycleTerms",
    "MeyerForm",
    "SignatureBreakdown",
    "cocycle_terms",
    "elliptic_factorization",
    "meyer_cocycle",
    "meyer_form",
    "sigma_over_sphere",
    "sign_convention",
]
