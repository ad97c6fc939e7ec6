"""Factory for picking a document parser by format."""

from typing import Dict, Optional, Type

from ..fibration import Factorization
from ..schema.detector import FormatDetector
from ..utils.logger import get_logger
from .base import BaseFactorizationParser
from .diagnostics import SourceDocument
from .dsl import DslParser
from .json_codec import JsonParser

logger = get_logger(__name__)


class ParserFactory:
    """Creates the parser matching a document's format."""

    def __init__(self):
        self.detector = FormatDetector()
        self.logger = logger
        self._parsers: Dict[str, Type[BaseFactorizationParser]] = {
            "dsl": DslParser,
            "json": JsonParser,
        }

    def create_parser(self, fmt: str) -> BaseFactorizationParser:
        parser_class = self._parsers.get(fmt)
        if parser_class is None:
            raise ValueError(f"unknown document format {fmt!r}; expected one of {sorted(self._parsers)}")
        return parser_class()

    def parse(self, doc: SourceDocument, fmt: Optional[str] = None) -> Factorization:
        """
        Parse a document, detecting its format when not given.

        Args:
            doc: Source document
            fmt: "dsl", "json" or None to detect

        Returns:
            Factorization

        Raises:
            ParseError: on any syntax or semantic problem
        """
        fmt = fmt or self.detector.detect_format(doc.text, doc.path)
        return self.create_parser(fmt).parse(doc)

    def serialize(self, f: Factorization, fmt: str = "dsl") -> str:
        return self.create_parser(fmt).serialize(f)


_factory = ParserFactory()


def parse(doc: SourceDocument, fmt: Optional[str] = None) -> Factorization:
    return _factory.parse(doc, fmt)


def parse_text(text: str, path: str = "<input>", fmt: Optional[str] = None) -> Factorization:
    return _factory.parse(SourceDocument(text, path), fmt)


def serialize(f: Factorization, fmt: str = "dsl") -> str:
    return _factory.serialize(f, fmt)
