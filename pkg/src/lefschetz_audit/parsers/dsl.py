"""Parser and canonical printer for the factorization description language."""

import json
from typing import Any, Dict, List, Optional, Tuple

from lark import Token, Tree
from lark.exceptions import LarkError, UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from ..fibration import Factorization, Tristate
from ..surface import Curve
from .base import FORMAT_VERSION, BaseFactorizationParser, Position
from .diagnostics import DiagnosticCollector, SourceDocument
from .grammar import PARSER, describe_terminal


def _first_token(node: Any) -> Optional[Token]:
    if isinstance(node, Token):
        return node
    for token in node.scan_values(lambda v: isinstance(v, Token)):
        return token
    return None


def _pos(node: Any, default: Position) -> Position:
    token = _first_token(node)
    if token is None or token.line is None:
        return default
    return token.line, token.column


class DslParser(BaseFactorizationParser):
    """Parser for ``.lf`` documents."""

    format_name = "dsl"

    def parse(self, doc: SourceDocument) -> Factorization:
        diag = DiagnosticCollector(doc)
        tree = self._syntax(doc, diag)
        root = tree.children[0]
        name_token = root.children[0]
        header = (name_token.line, name_token.column)
        name = self._string(name_token, diag)

        singles: Dict[str, Tuple[Any, Position]] = {}
        curves: List[Tuple[str, Curve, Position]] = []
        word: Optional[List[Tuple[str, Position]]] = None
        word_position = None
        handles = None
        flags = None

        for stmt in root.children[1:]:
            pos = _pos(stmt, header)
            kind = stmt.data
            if kind in ("fiber_genus", "base_genus", "version_decl", "convention_decl"):
                if kind in singles:
                    diag.error(*pos, f"duplicate {kind.replace('_decl', '')} statement")
                    continue
                token = stmt.children[0]
                value = self._string(token, diag) if kind == "convention_decl" else self._int(token, diag)
                singles[kind] = (value, pos)
            elif kind in ("nonsep_curve", "sep_curve"):
                cname = str(stmt.children[0])
                if kind == "nonsep_curve":
                    coords = [self._int(t, diag) for t in stmt.children[1].children]
                    curve = self.nonseparating_curve(coords, pos, diag)
                else:
                    curve = Curve.separating(self._int(stmt.children[1], diag))
                curves.append((cname, curve, pos))
            elif kind == "word_decl":
                if word is not None:
                    diag.error(*pos, "duplicate word statement")
                    continue
                word_position = pos
                word = [(str(t), (t.line, t.column)) for t in stmt.children[1:]]
            elif kind == "handles_block":
                if handles is not None:
                    diag.error(*pos, "duplicate handles block")
                    continue
                handles = []
                for matrix in stmt.children[1:]:
                    rows = [[self._int(t, diag) for t in row.children] for row in matrix.children]
                    handles.append((rows, _pos(matrix, pos)))
            elif kind == "flags_block":
                if flags is not None:
                    diag.error(*pos, "duplicate flags block")
                    continue
                flags = (self._flags(stmt.children[1:], diag), pos)

        def single(key):
            return singles.get(key)

        return self.build(
            diag,
            name=name,
            header=header,
            fiber_genus=single("fiber_genus"),
            base_genus=single("base_genus"),
            curves=curves,
            word=word or [],
            word_position=word_position,
            handles=handles,
            flags=flags,
            convention=single("convention_decl"),
            version=single("version_decl"),
        )

    def _syntax(self, doc: SourceDocument, diag: DiagnosticCollector) -> Tree:
        try:
            return PARSER.parse(doc.text)
        except UnexpectedInput as e:
            line, column = getattr(e, "line", -1), getattr(e, "column", -1)
            if not isinstance(line, int) or line < 1:
                line, column = doc.end_position()
            diag.error(line, column, self._describe(e))
        except LarkError as e:
            diag.error(1, 1, f"syntax error: {e.__class__.__name__}")
        except RecursionError:
            diag.error(1, 1, "document nests too deeply")
        diag.raise_if_errors()

    @staticmethod
    def _describe(e: UnexpectedInput) -> str:
        if isinstance(e, UnexpectedCharacters):
            return f"unexpected character {e.char!r}"
        if isinstance(e, UnexpectedEOF):
            return "unexpected end of input"
        if isinstance(e, UnexpectedToken):
            expected = ", ".join(sorted(describe_terminal(t) for t in e.expected))
            found = "end of input" if e.token.type == "$END" else repr(str(e.token))
            return f"unexpected {found}; expected one of: {expected}"
        return "syntax error"

    @staticmethod
    def _int(token: Token, diag: DiagnosticCollector) -> int:
        try:
            return int(token)
        except ValueError:
            diag.error(token.line, token.column, "integer literal too long")
            return 0

    @staticmethod
    def _string(token: Token, diag: DiagnosticCollector) -> str:
        try:
            value = json.loads(token)
        except ValueError:
            diag.error(token.line, token.column, "invalid string literal")
            return ""
        return value

    def _flags(self, items: List[Tree], diag: DiagnosticCollector) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for item in items:
            key_token, value = item.children
            key = str(key_token)
            if key in out:
                diag.error(key_token.line, key_token.column, f"duplicate flag '{key}'")
                continue
            if value.data == "true_value":
                out[key] = Tristate.TRUE
            elif value.data == "false_value":
                out[key] = Tristate.FALSE
            elif value.data == "unknown_value":
                out[key] = Tristate.UNKNOWN
            elif value.data == "int_value":
                out[key] = self._int(value.children[0], diag)
            else:
                out[key] = self._string(value.children[0], diag)
        return out

    def serialize(self, f: Factorization) -> str:
        def literal(text: str) -> str:
            return json.dumps(text, ensure_ascii=False)

        lines = [
            f"fibration {literal(f.name)} {{",
            f"  format_version {FORMAT_VERSION}",
            f"  convention {literal(f.convention)}",
            f"  fiber_genus {f.fiber_genus}",
            f"  base_genus {f.base_genus}",
        ]
        for cname, curve in f.curves:
            if curve.is_separating:
                lines.append(f"  curve {cname} sep {curve.side_genus}")
            else:
                lines.append(f"  curve {cname} nonsep {curve.homology_class}")
        lines.append("  word " + " ".join(f.word))
        if f.handle_monodromies is not None:
            lines.append("  handles {")
            for handle in f.handle_monodromies:
                rows = " ".join(
                    "(" + ",".join(str(x) for x in row) + ")" for row in handle.m.to_rows()
                )
                lines.append(f"    matrix {rows}".rstrip())
            lines.append("  }")
        flags = f.flags.to_document()
        if flags:
            rendered = []
            for key, value in flags.items():
                if isinstance(value, str) and key in ("known_manifold", "kodaira_dimension"):
                    rendered.append(f"    {key} = {literal(value)}")
                else:
                    rendered.append(f"    {key} = {value}")
            lines.append("  flags {")
            lines.append(",\n".join(rendered))
            lines.append("  }")
        lines.append("}")
        return "\n".join(lines) + "\n"
