"""Bounds on the degree of the Hodge bundle, (l + σ)/4."""

from fractions import Fraction
from typing import List

from ..invariants import hodge_pairing
from . import register_check
from .base import Clause, InequalityCheck, compare, first_reason, needs_sigma, needs_sphere


@register_check("c410")
class HodgeDegreeOverSphere(InequalityCheck):
    citation = "over S²: (l+σ)/4 ≥ l/12 + (g-1)/3 ≥ (3g-2)/6"

    def applicability(self, ctx):
        return first_reason(needs_sphere(ctx), needs_sigma(ctx))

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        middle = Fraction(r.l, 12) + Fraction(ctx.g - 1, 3)
        return [
            compare("(l+σ)/4 ≥ l/12 + (g-1)/3", hodge_pairing(r.l, r.sigma), "≥", middle),
            compare("l/12 + (g-1)/3 ≥ (3g-2)/6", middle, "≥", Fraction(3 * ctx.g - 2, 6)),
        ]

    def note(self, ctx) -> str:
        r = ctx.report
        if hodge_pairing(r.l, r.sigma) == Fraction(r.l, 12) + Fraction(ctx.g - 1, 3):
            return "equality"
        return ""


@register_check("base_pairing")
class HodgeDegreeOverCurve(InequalityCheck):
    citation = "over a genus-h base: (l+σ)/4 ≥ -(h-1)(g-1)/2 + l/12"

    def applicability(self, ctx):
        if ctx.h < 1:
            return "requires base genus at least 1"
        return needs_sigma(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        rhs = Fraction(-(ctx.h - 1) * (ctx.g - 1), 2) + Fraction(r.l, 12)
        return [compare("(l+σ)/4 ≥ -(h-1)(g-1)/2 + l/12", hodge_pairing(r.l, r.sigma), "≥", rhs)]
