"""Positive Dehn-twist factorizations and their homological closure."""

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import reduce
from typing import Dict, List, Optional, Tuple

from ..errors import DimensionMismatch, InvalidCurve
from ..surface import Curve, SymplecticMatrix, commutator, require_genus, transvection
from ..utils.logger import get_logger
from .flags import GroundTruthFlags

logger = get_logger(__name__)

CONVENTION = (
    "right-handed twist x->x+<x,v>v; letters applied left to right; "
    "column vectors: T(w_l)...T(w_1)"
)

CURVE_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

# keywords of the description language; a curve named like one cannot be written back
RESERVED_NAMES = frozenset({
    "fibration", "fiber_genus", "base_genus", "format_version", "convention",
    "curve", "nonsep", "sep", "word", "handles", "matrix", "flags",
    "true", "false", "unknown",
})


def curve_name_problem(name: object) -> Optional[str]:
    """Why ``name`` cannot label a curve, or None when it can."""
    if not isinstance(name, str) or not CURVE_NAME.fullmatch(name):
        return f"curve name {name!r} must match {CURVE_NAME.pattern}"
    if name in RESERVED_NAMES:
        return f"curve name '{name}' is a reserved word"
    return None


class ClosureVerdict(str, Enum):
    CLOSED = "Closed"
    CLOSED_UP_TO_COMMUTATORS = "ClosedUpToCommutators"
    UNVERIFIED = "Unverified"
    VIOLATED = "Violated"

    @property
    def is_closed(self) -> bool:
        return self in (ClosureVerdict.CLOSED, ClosureVerdict.CLOSED_UP_TO_COMMUTATORS)


@dataclass(frozen=True)
class FiberCounts:
    """l singular fibers, n irreducible (non-separating), s reducible."""
    l: int  # noqa: E741
    n: int
    s: int


@dataclass(frozen=True)
class Factorization:
    """A word of vanishing cycles over a base of genus h.

    ``curves`` keeps declaration order; ``handle_monodromies`` holds the
    images C1, D1, ..., Ch, Dh of the base handle loops when h > 0.
    """
    name: str
    fiber_genus: int
    base_genus: int
    curves: Tuple[Tuple[str, Curve], ...]
    word: Tuple[str, ...]
    handle_monodromies: Optional[Tuple[SymplecticMatrix, ...]] = None
    flags: GroundTruthFlags = field(default_factory=GroundTruthFlags)
    convention: str = CONVENTION

    def __post_init__(self):
        g = require_genus(self.fiber_genus)
        if not isinstance(self.base_genus, int) or self.base_genus < 0:
            raise DimensionMismatch(f"base genus must be nonnegative, got {self.base_genus!r}")
        object.__setattr__(self, "curves", tuple((n, c) for n, c in self.curves))
        object.__setattr__(self, "word", tuple(self.word))
        seen = set()
        for name, curve in self.curves:
            problem = curve_name_problem(name)
            if problem:
                raise InvalidCurve(problem)
            if name in seen:
                raise InvalidCurve(f"duplicate curve name '{name}'")
            seen.add(name)
            curve.validate(g)
        if not self.word:
            raise InvalidCurve("the word must contain at least one twist")
        for letter in self.word:
            if letter not in seen:
                raise InvalidCurve(f"undeclared curve '{letter}'")
        if self.handle_monodromies is not None:
            handles = tuple(self.handle_monodromies)
            object.__setattr__(self, "handle_monodromies", handles)
            if self.base_genus == 0:
                raise DimensionMismatch("handle monodromies need base genus > 0")
            if len(handles) != 2 * self.base_genus:
                raise DimensionMismatch(
                    f"expected {2 * self.base_genus} handle matrices, got {len(handles)}"
                )
            for h in handles:
                if h.g != g:
                    raise DimensionMismatch("handle matrix genus differs from fiber genus")

    @property
    def curve_map(self) -> Dict[str, Curve]:
        return dict(self.curves)

    @property
    def length(self) -> int:
        return len(self.word)

    def rotated(self, k: int) -> "Factorization":
        """Cyclic rotation of the word by k letters."""
        k %= len(self.word)
        return replace(self, word=self.word[k:] + self.word[:k])

    def letter_matrices(self) -> List[SymplecticMatrix]:
        """Transvection of each word letter, in word order."""
        cache = {name: transvection(c, self.fiber_genus) for name, c in self.curves}
        return [cache[letter] for letter in self.word]


def counts(f: Factorization) -> FiberCounts:
    """Count singular fibers by the kind of their vanishing cycle."""
    curves = f.curve_map
    s = sum(1 for letter in f.word if curves[letter].is_separating)
    return FiberCounts(l=len(f.word), n=len(f.word) - s, s=s)


def monodromy_product(f: Factorization) -> SymplecticMatrix:
    """Global homological monodromy T(w_l)...T(w_1)."""
    return reduce(
        lambda acc, t: t @ acc,
        f.letter_matrices(),
        SymplecticMatrix.identity(f.fiber_genus),
    )


def verify_closure(f: Factorization) -> ClosureVerdict:
    """Homology-level closure test.

    Over the sphere the monodromy must be the identity. Over a genus-h base
    it must equal [C1, D1]...[Ch, Dh] when the handle images are supplied;
    without them the verdict is Unverified. A closed verdict is only a
    necessary condition for the word to be a relator in the mapping class
    group.
    """
    product = monodromy_product(f)
    if f.base_genus == 0:
        verdict = ClosureVerdict.CLOSED if product.is_identity() else ClosureVerdict.VIOLATED
    elif f.handle_monodromies is None:
        verdict = ClosureVerdict.UNVERIFIED
    else:
        handles = f.handle_monodromies
        target = SymplecticMatrix.identity(f.fiber_genus)
        for i in range(f.base_genus):
            target = target @ commutator(handles[2 * i], handles[2 * i + 1])
        verdict = (
            ClosureVerdict.CLOSED_UP_TO_COMMUTATORS if product == target
            else ClosureVerdict.VIOLATED
        )
    logger.debug("closure_verified", name=f.name, verdict=verdict.value, length=f.length)
    return verdict
