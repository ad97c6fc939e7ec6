"""Source documents and positioned parse diagnostics."""

from dataclasses import dataclass
from typing import List, Optional

from ..errors import ParseError


@dataclass(frozen=True)
class SourceDocument:
    """UTF-8 text plus the path it came from, for error reporting."""
    text: str
    path: str = "<input>"

    @classmethod
    def from_bytes(cls, data: bytes, path: str = "<input>") -> "SourceDocument":
        """Decode raw bytes, reporting the first invalid byte as a diagnostic."""
        try:
            return cls(data.decode("utf-8-sig"), path)
        except UnicodeDecodeError as e:
            prefix = data[:e.start].decode("utf-8", errors="replace")
            line = prefix.count("\n") + 1
            column = len(prefix) - (prefix.rfind("\n") + 1) + 1
            raise ParseError(
                [ParseDiagnostic(line, column, f"invalid UTF-8 byte 0x{data[e.start]:02x}")],
                path,
            ) from None

    def position(self, offset: int) -> "tuple[int, int]":
        """1-based (line, column) of a character offset."""
        offset = max(0, min(offset, len(self.text)))
        prefix = self.text[:offset]
        return prefix.count("\n") + 1, offset - (prefix.rfind("\n") + 1) + 1

    def end_position(self) -> "tuple[int, int]":
        return self.position(len(self.text))


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"

    def render(self, path: Optional[str] = None) -> str:
        return f"{path or '<input>'}:{self.line}:{self.column}: {self.severity}: {self.message}"


class DiagnosticCollector:
    """Accumulates diagnostics while a document is checked."""

    def __init__(self, doc: SourceDocument):
        self.doc = doc
        self.items: List[ParseDiagnostic] = []

    def error(self, line: int, column: int, message: str):
        self.items.append(ParseDiagnostic(line, column, message, "error"))

    def warning(self, line: int, column: int, message: str):
        self.items.append(ParseDiagnostic(line, column, message, "warning"))

    @property
    def has_errors(self) -> bool:
        return any(d.severity == "error" for d in self.items)

    def raise_if_errors(self):
        if self.has_errors:
            ordered = sorted(self.items, key=lambda d: (d.severity != "error", d.line, d.column))
            raise ParseError(ordered, self.doc.path)
