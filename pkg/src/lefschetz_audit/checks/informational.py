"""Believed or conjectural bounds; reported, never counted as failures."""

from typing import List

from . import register_check
from .base import Clause, InequalityCheck, compare, needs_sphere


class InformationalCheck(InequalityCheck):
    informational = True

    def applicability(self, ctx):
        return needs_sphere(ctx)


@register_check("info_stipsicz_l")
class StipsiczFiberCount(InformationalCheck):
    citation = "best known general bound: l ≥ 8g/5"

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("5l ≥ 8g", 5 * ctx.report.l, "≥", 8 * ctx.g)]


@register_check("info_gompf")
class GompfFiberCount(InformationalCheck):
    citation = "conditional on Gompf's conjecture: l ≥ 4g - 4"

    def evaluate(self, ctx) -> List[Clause]:
        return [compare("l ≥ 4g - 4", ctx.report.l, "≥", 4 * ctx.g - 4)]


@register_check("info_gompf_parity")
class GompfParityFiberCount(InformationalCheck):
    citation = "conditional on Gompf's conjecture: l ≥ 2g + 2 for odd g, l ≥ 2g for even g"

    def evaluate(self, ctx) -> List[Clause]:
        g = ctx.g
        bound = 2 * g + 2 if g % 2 else 2 * g
        return [compare("l ≥ 2g + 2 (odd g) / 2g (even g)", ctx.report.l, "≥", bound)]


@register_check("info_min_n")
class BelievedMinimalIrreducible(InformationalCheck):
    citation = "believed exact minima: n ≥ 6 at g = 2 and n ≥ 12 at g = 3"

    MINIMA = {2: 6, 3: 12}

    def applicability(self, ctx):
        reason = needs_sphere(ctx)
        if reason is None and ctx.g not in self.MINIMA:
            reason = "only known at fiber genus 2 and 3"
        return reason

    def evaluate(self, ctx) -> List[Clause]:
        bound = self.MINIMA[ctx.g]
        return [compare(f"n ≥ {bound}", ctx.report.n, "≥", bound)]
