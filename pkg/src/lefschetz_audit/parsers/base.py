"""Base class for factorization document parsers."""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from ..errors import DimensionMismatch, InconsistentInput, InvalidCurve, LefschetzAuditError
from ..fibration import CONVENTION, Factorization, GroundTruthFlags, curve_name_problem
from ..linalg import IntegerMatrix
from ..surface import Curve, SymplecticMatrix
from ..utils.logger import get_logger
from .diagnostics import DiagnosticCollector, SourceDocument

logger = get_logger(__name__)

FORMAT_VERSION = 1

# 2g x 2g matrices are built for every letter
MAX_FIBER_GENUS = 256

Position = Tuple[int, int]


class BaseFactorizationParser(ABC):
    """Shared semantic checks; subclasses handle concrete syntax.

    Subclasses turn a document into plain fields with source positions and
    call ``build`` which validates everything and reports positioned
    diagnostics instead of raising on the first problem.
    """

    format_name = "abstract"

    def __init__(self):
        self.logger = logger

    @abstractmethod
    def parse(self, doc: SourceDocument) -> Factorization:
        """
        Parse a document into a factorization.

        Args:
            doc: Source text with its path

        Returns:
            Validated Factorization

        Raises:
            ParseError: with at least one positioned error diagnostic
        """
        pass

    @abstractmethod
    def serialize(self, f: Factorization) -> str:
        """Canonical text for ``f``; parsing it returns an equal value."""
        pass

    @staticmethod
    def nonseparating_curve(coords: List[int], pos: Position,
                            diag: DiagnosticCollector) -> Optional[Curve]:
        """Curve from raw coordinates, or None after reporting an odd arity."""
        try:
            return Curve.nonseparating(coords)
        except DimensionMismatch:
            diag.error(*pos, f"class has {len(coords)} coordinates, expected an even number")
            return None

    def build(self,
              diag: DiagnosticCollector,
              *,
              name: str,
              header: Position,
              fiber_genus: Optional[Tuple[int, Position]],
              base_genus: Optional[Tuple[int, Position]],
              curves: List[Tuple[str, Optional[Curve], Position]],
              word: List[Tuple[str, Position]],
              word_position: Optional[Position],
              handles: Optional[List[Tuple[List[List[int]], Position]]],
              flags: Optional[Tuple[Dict[str, Any], Position]],
              convention: Optional[Tuple[str, Position]],
              version: Optional[Tuple[int, Position]]) -> Optional[Factorization]:
        """Validate collected fields and construct the factorization."""
        if version is not None and version[0] != FORMAT_VERSION:
            diag.error(*version[1], f"unsupported format_version {version[0]}")
        if convention is not None and convention[0] != CONVENTION:
            diag.error(*convention[1], "unsupported composition convention")

        if fiber_genus is None:
            diag.error(*header, "missing fiber_genus")
            diag.raise_if_errors()
        g = fiber_genus[0]
        if g < 0:
            diag.error(*fiber_genus[1], "fiber_genus must be nonnegative")
        elif g > MAX_FIBER_GENUS:
            diag.error(*fiber_genus[1], f"fiber_genus above {MAX_FIBER_GENUS} is not supported")
        h = 0 if base_genus is None else base_genus[0]
        if h < 0:
            diag.error(*base_genus[1], "base_genus must be nonnegative")
        diag.raise_if_errors()

        declared: Dict[str, Optional[Curve]] = {}
        ordered: List[Tuple[str, Curve]] = []
        for cname, curve, pos in curves:
            problem = curve_name_problem(cname)
            if problem:
                diag.error(*pos, problem)
                declared.setdefault(cname, None)
                continue
            if cname in declared:
                diag.error(*pos, f"duplicate curve name '{cname}'")
                continue
            declared[cname] = curve
            if curve is None:
                continue
            try:
                curve.validate(g)
            except InvalidCurve as e:
                diag.error(*pos, str(e))
            ordered.append((cname, curve))

        if not word:
            diag.error(*(word_position or header), "the word must contain at least one twist")
        for letter, pos in word:
            if letter not in declared:
                diag.error(*pos, f"undeclared curve '{letter}'")

        handle_mats = None
        if handles is not None:
            handle_mats = []
            if h == 0:
                diag.error(*(handles[0][1] if handles else header), "handles given for base_genus 0")
            elif len(handles) != 2 * h:
                pos = handles[0][1] if handles else header
                diag.error(*pos, f"expected {2 * h} handle matrices, got {len(handles)}")
            for rows, pos in handles:
                try:
                    m = IntegerMatrix.from_rows(rows)
                    handle_mats.append(SymplecticMatrix(g, m))
                except (DimensionMismatch, TypeError) as e:
                    diag.error(*pos, f"bad handle matrix: {e}")

        ground_truth = GroundTruthFlags()
        if flags is not None:
            try:
                ground_truth = GroundTruthFlags.from_mapping(flags[0])
            except (InconsistentInput, ValueError, TypeError) as e:
                diag.error(*flags[1], f"bad flags: {e}")

        diag.raise_if_errors()
        try:
            f = Factorization(
                name=name,
                fiber_genus=g,
                base_genus=h,
                curves=tuple(ordered),
                word=tuple(letter for letter, _ in word),
                handle_monodromies=tuple(handle_mats) if handle_mats is not None else None,
                flags=ground_truth,
            )
        except LefschetzAuditError as e:
            diag.error(*header, str(e))
            diag.raise_if_errors()
        self.logger.debug("parsed_factorization", format=self.format_name, name=name,
                          fiber_genus=g, base_genus=h, length=f.length)
        return f
