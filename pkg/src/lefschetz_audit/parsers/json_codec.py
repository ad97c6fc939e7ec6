"""JSON form of a factorization."""

import json
from typing import Any, Dict, List, Optional, Tuple

from ..fibration import Factorization
from ..surface import Curve
from .base import FORMAT_VERSION, BaseFactorizationParser, Position
from .diagnostics import DiagnosticCollector, SourceDocument


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class JsonParser(BaseFactorizationParser):
    """Parser for ``.json`` documents.

    Field positions are recovered by locating the key text in the source,
    so they point at the first occurrence of the offending key or value.
    """

    format_name = "json"

    def parse(self, doc: SourceDocument) -> Factorization:
        diag = DiagnosticCollector(doc)
        try:
            data = json.loads(doc.text)
        except json.JSONDecodeError as e:
            diag.error(e.lineno, e.colno, f"invalid JSON: {e.msg}")
            diag.raise_if_errors()
        except (RecursionError, ValueError) as e:
            diag.error(1, 1, f"invalid JSON: {e.__class__.__name__}")
            diag.raise_if_errors()

        start = doc.position(len(doc.text) - len(doc.text.lstrip()))
        if not isinstance(data, dict):
            diag.error(*start, "top-level value must be an object")
            diag.raise_if_errors()

        def where(key: str, after: int = 0) -> Position:
            idx = doc.text.find(json.dumps(key, ensure_ascii=False), after)
            if idx < 0:
                idx = doc.text.find(json.dumps(key), after)
            return doc.position(idx) if idx >= 0 else start

        def offset_of(key: str) -> int:
            idx = doc.text.find(json.dumps(key, ensure_ascii=False))
            return max(idx, 0)

        def integer(key: str) -> Optional[Tuple[int, Position]]:
            if key not in data:
                return None
            if not _is_int(data[key]):
                diag.error(*where(key), f"'{key}' must be an integer")
                return None
            return data[key], where(key)

        def text(key: str) -> Optional[Tuple[str, Position]]:
            if key not in data:
                return None
            if not isinstance(data[key], str):
                diag.error(*where(key), f"'{key}' must be a string")
                return None
            return data[key], where(key)

        allowed = {"format_version", "name", "fiber_genus", "base_genus", "convention",
                   "curves", "word", "handles", "flags"}
        for key in data:
            if key not in allowed:
                diag.warning(*where(key), f"unknown field '{key}' ignored")

        name = text("name")
        if name is None and "name" not in data:
            diag.error(*start, "missing name")
        fiber_genus = integer("fiber_genus")
        if fiber_genus is None and "fiber_genus" in data:
            diag.raise_if_errors()
        base_genus = integer("base_genus")

        curves: List[Tuple[str, Optional[Curve], Position]] = []
        raw_curves = data.get("curves", [])
        curves_at = offset_of("curves")
        if not isinstance(raw_curves, list):
            diag.error(*where("curves"), "'curves' must be a list")
            raw_curves = []
        for item in raw_curves:
            if not isinstance(item, dict) or not isinstance(item.get("name"), str):
                diag.error(*where("curves"), "each curve needs a string 'name'")
                continue
            cname = item["name"]
            pos = where(cname, curves_at)
            kind = item.get("kind")
            if kind == "nonsep":
                coords = item.get("class")
                if not isinstance(coords, list) or not all(_is_int(c) for c in coords):
                    diag.error(*pos, f"curve '{cname}' needs an integer 'class' list")
                    continue
                curves.append((cname, self.nonseparating_curve(coords, pos, diag), pos))
            elif kind == "sep":
                side = item.get("side_genus")
                if not _is_int(side):
                    diag.error(*pos, f"curve '{cname}' needs an integer 'side_genus'")
                    continue
                curves.append((cname, Curve.separating(side), pos))
            else:
                diag.error(*pos, f"curve '{cname}' has unknown kind {kind!r}")

        word: List[Tuple[str, Position]] = []
        raw_word = data.get("word")
        word_at = offset_of("word")
        if raw_word is None:
            diag.error(*start, "missing word")
        elif not isinstance(raw_word, list) or not all(isinstance(x, str) for x in raw_word):
            diag.error(*where("word"), "'word' must be a list of curve names")
        else:
            word = [(letter, where(letter, word_at)) for letter in raw_word]

        handles = None
        if data.get("handles") is not None:
            raw = data["handles"]
            handles_at = where("handles")
            ok = isinstance(raw, list) and all(
                isinstance(m, list) and all(
                    isinstance(r, list) and all(_is_int(x) for x in r) for r in m
                ) for m in raw
            )
            if not ok:
                diag.error(*handles_at, "'handles' must be a list of integer matrices")
            else:
                handles = [(m, handles_at) for m in raw]

        flags = None
        if data.get("flags") is not None:
            if not isinstance(data["flags"], dict):
                diag.error(*where("flags"), "'flags' must be an object")
            else:
                flags = (dict(data["flags"]), where("flags"))

        diag.raise_if_errors()
        return self.build(
            diag,
            name=name[0] if name else "",
            header=name[1] if name else start,
            fiber_genus=fiber_genus,
            base_genus=base_genus,
            curves=curves,
            word=word,
            word_position=where("word") if raw_word is not None else None,
            handles=handles,
            flags=flags,
            convention=text("convention"),
            version=integer("format_version"),
        )

    def to_document(self, f: Factorization) -> Dict[str, Any]:
        curves = []
        for cname, curve in f.curves:
            if curve.is_separating:
                curves.append({"name": cname, "kind": "sep", "side_genus": curve.side_genus})
            else:
                curves.append({"name": cname, "kind": "nonsep",
                               "class": list(curve.homology_class.coords)})
        out: Dict[str, Any] = {
            "format_version": FORMAT_VERSION,
            "name": f.name,
            "convention": f.convention,
            "fiber_genus": f.fiber_genus,
            "base_genus": f.base_genus,
            "curves": curves,
            "word": list(f.word),
        }
        if f.handle_monodromies is not None:
            out["handles"] = [h.m.to_rows() for h in f.handle_monodromies]
        flags = f.flags.to_document()
        if flags:
            out["flags"] = flags
        return out

    def serialize(self, f: Factorization) -> str:
        return json.dumps(self.to_document(f), indent=2, ensure_ascii=False) + "\n"
