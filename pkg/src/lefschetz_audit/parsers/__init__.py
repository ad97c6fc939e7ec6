"""Monodromy factorization documents: description language and JSON."""

from .base import FORMAT_VERSION, BaseFactorizationParser
from .diagnostics import ParseDiagnostic, SourceDocument
from .dsl import DslParser
from .factory import ParserFactory, parse, parse_text, serialize
from .json_codec import JsonParser

__all__ = [
    "FORMAT_VERSION",
    "BaseFactorizationParser",
    "DslParser",
    "JsonParser",
    "ParseDiagnostic",
    "ParserFactory",
    "SourceDocument",
    "parse",
    "parse_text",
    "serialize",
]
