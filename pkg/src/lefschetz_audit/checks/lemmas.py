"""Homological identities and bounds for fibrations over the sphere."""

from typing import List, Optional

from ..fibration import Tristate
from ..invariants import kneser_max_degree, ruled_mu
from . import register_check
from .base import (
    CheckContext,
    Clause,
    Inapplicable,
    InequalityCheck,
    HYPOTHESIS_UNKNOWN,
    compare,
    congruent,
    equivalent,
    first_reason,
    needs_sigma,
    needs_sphere,
)


def _sphere_with_betti(ctx: CheckContext) -> Optional[str]:
    return first_reason(needs_sphere(ctx), needs_sigma(ctx),
                        None if ctx.has_betti else "Betti numbers unknown")


@register_check("l24_p1")
class IrreducibleFiberCount(InequalityCheck):
    citation = "irreducible fibers kill H1: n ≥ b1(F) - b1(M), n = 0 iff b1(M) = 2g"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [
            compare("n ≥ 2g - b1", r.n, "≥", 2 * ctx.g - r.b1),
            equivalent("n = 0 ⟺ b1 = 2g", r.n == 0, r.b1 == 2 * ctx.g),
        ]


@register_check("l24_p2")
class IntersectionFormRanks(InequalityCheck):
    citation = "ranks of the intersection form: s+1 ≤ b- ≤ l+1 and 1 ≤ b+ ≤ n+1"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [
            compare("b- ≥ s + 1", r.b_minus, "≥", r.s + 1),
            compare("b- ≤ l + 1", r.b_minus, "≤", r.l + 1),
            compare("b+ ≥ 1", r.b_plus, "≥", 1),
            compare("b+ ≤ n + 1", r.b_plus, "≤", r.n + 1),
        ]


@register_check("l24_p3")
class SignatureCongruence(InequalityCheck):
    citation = "σ = 4k - l for some k ≥ 0; σ = -l when every singular fiber is reducible"

    def applicability(self, ctx):
        return first_reason(needs_sphere(ctx), needs_sigma(ctx))

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        clauses = [
            congruent("σ ≡ -l (mod 4)", r.sigma, -r.l, 4),
            compare("σ ≥ -l", r.sigma, "≥", -r.l),
        ]
        if r.s == r.l:
            clauses.append(compare("s = l ⇒ σ = -l", r.sigma, "=", -r.l))
        return clauses


@register_check("l24_handles")
class HandleCount(InequalityCheck):
    citation = "Poincaré duality on the handle decomposition: l + 2 - b2 = 2(2g - b1)"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [compare("l + 2 - b2 = 2(2g - b1)", r.l + 2 - r.b2, "=", 2 * (2 * ctx.g - r.b1))]


@register_check("l24_bplus_parity")
class BPlusParity(InequalityCheck):
    citation = "almost complex total space: b+ ≡ b1 - 1 (mod 2)"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [congruent("b+ ≡ b1 - 1 (mod 2)", r.b_plus, r.b1 - 1, 2)]


@register_check("l25")
class UpperBoundsAwayFromMinimum(InequalityCheck):
    citation = "if σ ≥ -l + 4 then b1 ≤ 2g-2, b2 ≤ l-2, b+ ≤ n-3 and σ ≤ n-s-4"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        if r.sigma < -r.l + 4:
            raise Inapplicable("premise false: σ < -l + 4")
        return [
            compare("b1 ≤ 2g - 2", r.b1, "≤", 2 * ctx.g - 2),
            compare("b2 ≤ l - 2", r.b2, "≤", r.l - 2),
            compare("b+ ≤ n - 3", r.b_plus, "≤", r.n - 3),
            compare("σ ≤ n - s - 4", r.sigma, "≤", r.n - r.s - 4),
        ]


@register_check("l42_p44")
class RuledFiberGenus(InequalityCheck):
    citation = "on a blown-up ruled surface over a genus-h curve: g ≥ 2h - 1, and the least such g is 2h"

    def applicability(self, ctx):
        flags = ctx.flags
        if flags.rational_or_ruled is Tristate.UNKNOWN:
            return HYPOTHESIS_UNKNOWN
        if flags.rational_or_ruled is Tristate.FALSE:
            return "hypothesis not met: rational_or_ruled is false"
        if flags.ruled_base_genus is None:
            return HYPOTHESIS_UNKNOWN
        return None

    def evaluate(self, ctx) -> List[Clause]:
        hr = ctx.flags.ruled_base_genus
        return [
            compare("g ≥ 2h_r - 1", ctx.g, "≥", 2 * hr - 1),
            compare("g ≥ μ(h_r) = 2h_r", ctx.g, "≥", ruled_mu(hr)),
        ]

    def note(self, ctx) -> str:
        hr = ctx.flags.ruled_base_genus
        if hr < 1:
            return "ruled over the sphere"
        return f"Kneser degree bound fiber -> base curve: {kneser_max_degree(ctx.g, hr)}"


@register_check("l48")
class NearMinimalSignature(InequalityCheck):
    citation = "if σ = -l + 4 then g ≤ 2, and at g = 1 the fibration is E(1) with (σ, l) = (-8, 12)"

    def applicability(self, ctx):
        return _sphere_with_betti(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        if r.sigma != -r.l + 4:
            raise Inapplicable("premise false: σ ≠ -l + 4")
        clauses = [compare("g ≤ 2", ctx.g, "≤", 2)]
        if ctx.g == 1:
            clauses.append(compare("σ = -8", r.sigma, "=", -8))
            clauses.append(compare("l = 12", r.l, "=", 12))
        if ctx.g == 2:
            clauses.append(compare("b+ = 1", r.b_plus, "=", 1))
            clauses.append(compare("b1 = 2", r.b1, "=", 2))
        return clauses
