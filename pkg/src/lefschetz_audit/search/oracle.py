"""Exhaustive search for short positive words with trivial homological monodromy."""

import re
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from tqdm import tqdm

from ..config import Settings
from ..errors import BudgetExceeded, InconsistentInput, InvalidCurve, ParityError
from ..fibration import Factorization
from ..invariants import InvariantReport, compute_report, invariants_over_base
from ..linalg import IntegerMatrix, rank
from ..signature import sigma_over_sphere
from ..surface import Curve, SymplecticMatrix, transvection
from ..utils.logger import get_logger

logger = get_logger(__name__)

_GENERATOR = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*)\s*=\s*(\([^)]*\)|sep:\s*\d+)\s*(?:[,;]|$)")


@dataclass(frozen=True)
class SearchSpec:
    """Fiber genus, named generator curves and the longest word to try."""
    g: int
    generators: Tuple[Tuple[str, Curve], ...]
    max_length: int
    require_closed: bool = True

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if self.max_length < 1:
            raise InconsistentInput(f"max_length must be at least 1, got {self.max_length}")
        if not self.generators:
            raise InvalidCurve("at least one generator curve is needed")
        names = [name for name, _ in self.generators]
        if len(set(names)) != len(names):
            raise InvalidCurve("generator names must be distinct")
        for _, curve in self.generators:
            curve.validate(self.g)

    @property
    def state_count(self) -> int:
        return len(self.generators) ** self.max_length


@dataclass(frozen=True)
class SearchHit:
    word: Tuple[str, ...]
    report: InvariantReport

    @property
    def word_text(self) -> str:
        return " ".join(self.word)


def parse_generator_spec(text: str) -> Tuple[Tuple[str, Curve], ...]:
    """
    Parse ``a=(1,0),b=(0,1),c=sep:1`` into named curves.

    Raises:
        InvalidCurve: the text does not follow that shape
    """
    out: List[Tuple[str, Curve]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _GENERATOR.match(text, pos)
        if m is None:
            raise InvalidCurve(f"cannot read generator at column {pos + 1}: {text[pos:]!r}")
        name, body = m.group(1), m.group(2)
        if body.startswith("sep:"):
            out.append((name, Curve.separating(int(body[4:]))))
        else:
            inner = body[1:-1].strip()
            try:
                coords = [int(x) for x in inner.split(",")] if inner else []
            except ValueError:
                raise InvalidCurve(f"generator {name} has a non-integer coordinate") from None
            if len(coords) % 2:
                raise InvalidCurve(f"generator {name} has {len(coords)} coordinates")
            out.append((name, Curve.nonseparating(coords)))
        pos = m.end()
    return tuple(out)


class _Walker:
    """Depth-first enumeration below one first letter."""

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        self.names = sorted(name for name, _ in spec.generators)
        curves = dict(spec.generators)
        self.matrices: Dict[str, SymplecticMatrix] = {
            name: transvection(curves[name], spec.g) for name in self.names
        }
        self.identity = IntegerMatrix.identity(2 * spec.g)

    def _completable(self, product: SymplecticMatrix, remaining: int) -> bool:
        # each transvection changes P - I by a matrix of rank at most one
        return rank(product.m - self.identity) <= remaining

    def walk(self, first: str) -> List[Tuple[str, ...]]:
        found: List[Tuple[str, ...]] = []
        stack = [((first,), self.matrices[first])]
        limit = self.spec.max_length
        while stack:
            word, product = stack.pop()
            closed = product.is_identity()
            if closed or not self.spec.require_closed:
                found.append(word)
            remaining = limit - len(word)
            if remaining == 0:
                continue
            if self.spec.require_closed and not closed and not self._completable(product, remaining):
                continue
            # reversed so the smallest letter is popped first
            for name in reversed(self.names):
                stack.append((word + (name,), self.matrices[name] @ product))
        return found


def _report(spec: SearchSpec, word: Tuple[str, ...]) -> InvariantReport:
    f = Factorization(
        name="".join(word) if all(len(n) == 1 for n, _ in spec.generators) else " ".join(word),
        fiber_genus=spec.g,
        base_genus=0,
        curves=spec.generators,
        word=word,
    )
    if not spec.require_closed:
        return invariants_over_base(f)
    try:
        return compute_report(f)
    except ParityError as e:
        # closed in homology yet not the monodromy of any fibration
        logger.warning("search_hit_parity_error", word=f.name, error=str(e))
        return invariants_over_base(f, sigma_over_sphere(f).total)


def search_min_relators(spec: SearchSpec,
                        budget: Optional[int] = None,
                        workers: int = 1,
                        progress: bool = False) -> List[SearchHit]:
    """
    Enumerate every word of length at most ``max_length`` over the generators.

    With ``require_closed`` only homologically closed words are kept. First
    letters are sharded over a thread pool; the output is sorted
    lexicographically, so it does not depend on ``workers``.

    Args:
        spec: Search specification
        budget: Largest allowed |generators|^max_length, from the environment when None
        workers: Thread count
        progress: Show a progress bar on stderr

    Returns:
        SearchHit per word, with its InvariantReport

    Raises:
        BudgetExceeded: the state space is larger than the budget
    """
    budget = budget if budget is not None else Settings.from_env().search_budget
    if spec.state_count > budget:
        raise BudgetExceeded(
            f"{len(spec.generators)}^{spec.max_length} = {spec.state_count} states exceed the budget of {budget}"
        )
    walker = _Walker(spec)
    shards: Dict[str, List[Tuple[str, ...]]] = {}
    logger.info("search_started", g=spec.g, generators=walker.names,
                max_length=spec.max_length, workers=workers)

    bar = tqdm(total=len(walker.names), desc="Searching", file=sys.stderr, disable=not progress)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(walker.walk, first): first for first in walker.names}
            for future in as_completed(futures):
                shards[futures[future]] = future.result()
                bar.update(1)
    else:
        for first in walker.names:
            shards[first] = walker.walk(first)
            bar.update(1)
    bar.close()

    words = sorted(word for first in walker.names for word in shards[first])
    hits = [SearchHit(word, _report(spec, word)) for word in words]
    logger.info("search_finished", hits=len(hits))
    return hits

