"""Lower bounds on c1², on the number of singular fibers, and on Kodaira dimension."""

from typing import List

from ..fibration import Tristate
from ..invariants import KodairaDim, curve_kodaira, kodaira_sum, subadditivity_holds
from . import register_check
from .base import (
    HYPOTHESIS_UNKNOWN,
    Clause,
    InequalityCheck,
    compare,
    first_reason,
    needs_flag,
    needs_sigma,
    needs_sphere,
)


def _genus_at_least_two(ctx):
    return None if ctx.g >= 2 else "requires fiber genus at least 2"


@register_check("thm1")
class ChernSquareLowerBound(InequalityCheck):
    citation = "not rational or ruled: c1² ≥ 2(g-1)(h-1)"

    def applicability(self, ctx):
        return first_reason(
            needs_flag(ctx.flags.rational_or_ruled, Tristate.FALSE, "rational_or_ruled"),
            needs_sigma(ctx),
        )

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("c1² ≥ 2(g-1)(h-1)", ctx.report.c1_squared, "≥",
                        2 * (ctx.g - 1) * (ctx.h - 1))]


@register_check("stipsicz_lb")
class StipsiczChernBound(InequalityCheck):
    citation = "every Lefschetz fibration: c1² ≥ 4 - 4g"

    def applicability(self, ctx):
        return needs_sigma(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("c1² ≥ 4 - 4g", ctx.report.c1_squared, "≥", 4 - 4 * ctx.g)]


@register_check("p41")
class NotAllReducible(InequalityCheck):
    citation = "no fibration over S² with g ≥ 2 has σ = -l"

    def applicability(self, ctx):
        return first_reason(needs_sphere(ctx), _genus_at_least_two(ctx), needs_sigma(ctx))

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [compare("σ ≠ -l", r.sigma, "≠", -r.l)]


@register_check("c43")
class SomeIrreducibleFiber(InequalityCheck):
    citation = "at least one irreducible singular fiber over S²"

    def applicability(self, ctx):
        return needs_sphere(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("n ≥ 1", ctx.report.n, "≥", 1)]


@register_check("c45")
class SphereBundleBlowup(InequalityCheck):
    citation = "blowup of an S²-bundle: at least 2g singular fibers and g irreducible ones"

    def applicability(self, ctx):
        return first_reason(
            needs_sphere(ctx),
            needs_flag(ctx.flags.blowup_of_sphere_bundle, Tristate.TRUE, "blowup_of_sphere_bundle"),
        )

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        return [
            compare("l ≥ 2g", r.l, "≥", 2 * ctx.g),
            compare("n ≥ g", r.n, "≥", ctx.g),
        ]


@register_check("c46")
class NonRuledIrreducibleCount(InequalityCheck):
    citation = "not rational or ruled: n ≥ (6g+6)/5 + s/5"

    def applicability(self, ctx):
        return first_reason(
            needs_sphere(ctx),
            needs_flag(ctx.flags.rational_or_ruled, Tristate.FALSE, "rational_or_ruled"),
        )

    def evaluate(self, ctx) -> List[Clause]:
        r = ctx.report
        # cross-multiplied: 5n ≥ 6g + 6 + s
        return [compare("5n ≥ 6g + 6 + s", 5 * r.n, "≥", 6 * ctx.g + 6 + r.s)]


@register_check("thm2")
class IrreducibleAtLeastGenus(InequalityCheck):
    citation = "every fibration over S² with g ≥ 2 has at least g irreducible singular fibers"

    def applicability(self, ctx):
        return first_reason(needs_sphere(ctx), _genus_at_least_two(ctx))

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("n ≥ g", ctx.report.n, "≥", ctx.g)]


@register_check("p47")
class IrreducibleAtLeastFour(InequalityCheck):
    citation = "at least four irreducible singular fibers, and six when g ≥ 3"

    def applicability(self, ctx):
        return needs_sphere(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        n = ctx.report.n
        clauses = [compare("n ≥ 4", n, "≥", 4)]
        if ctx.g >= 3:
            clauses.append(compare("n ≥ 6", n, "≥", 6))
        return clauses


@register_check("p49")
class SingularFiberLowerBound(InequalityCheck):
    citation = "at least (6g+6)/5 singular fibers over S²"

    def applicability(self, ctx):
        return needs_sphere(ctx)

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("5l ≥ 6g + 6", 5 * ctx.report.l, "≥", 6 * ctx.g + 6)]


@register_check("c33")
class PositiveGenusBaseNotRuled(InequalityCheck):
    citation = "over a base of positive genus the total space is neither rational nor ruled"

    def applicability(self, ctx):
        if ctx.h < 1:
            return "requires base genus at least 1"
        if ctx.flags.rational_or_ruled is Tristate.UNKNOWN:
            return HYPOTHESIS_UNKNOWN
        return None

    def evaluate(self, ctx) -> List[Clause]:
        ruled = int(ctx.flags.rational_or_ruled is Tristate.TRUE)
        return [compare("rational_or_ruled = false", ruled, "=", 0)]


@register_check("c37")
class KodairaSubadditivity(InequalityCheck):
    citation = "Kodaira dimension is subadditive: k(M) ≥ k(F) + k(Σ)"

    def applicability(self, ctx):
        return None if ctx.flags.kodaira_dimension is not None else HYPOTHESIS_UNKNOWN

    def evaluate(self, ctx) -> List[Clause]:
        k_m = KodairaDim(ctx.flags.kodaira_dimension)
        k_f, k_sigma = curve_kodaira(ctx.g), curve_kodaira(ctx.h)
        return [Clause("k(M) ≥ k(F) + k(Σ)", k_m, "≥", kodaira_sum(k_f, k_sigma),
                       subadditivity_holds(k_m, k_f, k_sigma))]
