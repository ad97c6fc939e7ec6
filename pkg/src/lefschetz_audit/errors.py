"""Exception hierarchy shared by every subpackage.

Each class carries the process exit code the CLI maps it to.
"""

from typing import List, Optional


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


class LefschetzAuditError(Exception):
    """Base class for all errors raised by the package."""

    exit_code = EXIT_PRECONDITION


class DimensionMismatch(LefschetzAuditError, ValueError):
    """Vector or matrix sizes do not agree with the fiber genus."""


class NonSquare(LefschetzAuditError, ValueError):
    """A square matrix was required."""


class NotSymmetric(LefschetzAuditError, ValueError):
    """A symmetric matrix was required."""


class InvalidCurve(LefschetzAuditError, ValueError):
    """Curve data violates primitivity or the side-genus range."""

    exit_code = EXIT_PARSE


class WrongBaseGenus(LefschetzAuditError):
    """The operation is only defined over the sphere (h = 0)."""


class NotClosed(LefschetzAuditError):
    """The factorization does not close up homologically."""


class ParityError(LefschetzAuditError):
    """b2 + sigma is odd, so b+ and b- are not integers."""


class NotMinimal(LefschetzAuditError, ValueError):
    """Kodaira classification needs a minimal model."""


class InconsistentInput(LefschetzAuditError, ValueError):
    """Input data contradicts a classification result."""


class InvalidCodomain(LefschetzAuditError, ValueError):
    """Kneser's bound says nothing about maps to the sphere."""


class MismatchedReport(LefschetzAuditError, ValueError):
    """Invariant report was produced for a different (g, h)."""


class NotFound(LefschetzAuditError, KeyError):
    """Unknown catalog entry."""

    exit_code = EXIT_PARSE

    def __str__(self) -> str:
        return Exception.__str__(self)


class GenusMismatch(LefschetzAuditError, ValueError):
    """Fiber genera of the two summands differ."""


class BudgetExceeded(LefschetzAuditError):
    """Search state space is larger than the configured budget."""

    exit_code = EXIT_BUDGET


class CalibrationError(LefschetzAuditError):
    """No single Meyer sign convention reproduces the E(k) anchors."""


class ParseError(LefschetzAuditError, ValueError):
    """A document could not be turned into a factorization."""

    exit_code = EXIT_PARSE

    def __init__(self, diagnostics: List["ParseDiagnostic"], source: Optional[str] = None):  # noqa: F821
        self.diagnostics = list(diagnostics)
        self.source = source
        first = self.diagnostics[0] if self.diagnostics else None
        super().__init__(first.render(source) if first else "parse failed")
