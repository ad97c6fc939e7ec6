"""Built-in catalog of anchor fibrations."""

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from ..errors import NotFound
from ..fibration import Factorization, GroundTruthFlags
from ..parsers import SourceDocument, parse, serialize
from ..utils.logger import get_logger

logger = get_logger(__name__)

CATALOG_DIR = Path(__file__).parent
INDEX_PATH = CATALOG_DIR / "entries.yaml"
DOCUMENTS_DIR = CATALOG_DIR / "documents"

EXPECTED_FIELDS = (
    "g", "h", "l", "n", "s", "e", "sigma", "b1", "b2", "b_plus", "b_minus",
    "c1_squared", "hodge_pairing", "torsion",
)


@dataclass(frozen=True)
class CatalogEntry:
    """An anchor example: a word, expected invariants, or both."""
    name: str
    factorization: Optional[Factorization] = None
    expected: Dict[str, Any] = field(default_factory=dict)
    flags: GroundTruthFlags = field(default_factory=GroundTruthFlags)
    provenance: Dict[str, str] = field(default_factory=dict)
    document: Optional[str] = None

    def __post_init__(self):
        if self.factorization is None and not self.expected:
            raise ValueError(f"catalog entry {self.name} has neither a word nor expected invariants")
        unknown = set(self.expected) - set(EXPECTED_FIELDS)
        if unknown:
            raise ValueError(f"catalog entry {self.name} expects unknown fields {sorted(unknown)}")

    @property
    def has_word(self) -> bool:
        return self.factorization is not None

    @property
    def fiber_genus(self) -> Optional[int]:
        if self.factorization is not None:
            return self.factorization.fiber_genus
        return self.expected.get("g")

    @property
    def base_genus(self) -> int:
        if self.factorization is not None:
            return self.factorization.base_genus
        return self.expected.get("h", 0)

    def with_expected(self, **changes) -> "CatalogEntry":
        """Copy with some expected values replaced."""
        return CatalogEntry(
            name=self.name,
            factorization=self.factorization,
            expected={**self.expected, **changes},
            flags=self.flags,
            provenance=self.provenance,
            document=self.document,
        )


def _load_entry(raw: Dict[str, Any]) -> CatalogEntry:
    name = raw["name"]
    flags = GroundTruthFlags.from_mapping(raw.get("flags") or {})
    factorization = None
    document = raw.get("document")
    if document:
        path = DOCUMENTS_DIR / document
        factorization = parse(SourceDocument(path.read_text(encoding="utf-8"), str(path)))
        flags = factorization.flags.overridden_by(flags)
    return CatalogEntry(
        name=name,
        factorization=factorization,
        expected=dict(raw.get("expected") or {}),
        flags=flags,
        provenance=dict(raw.get("provenance") or {}),
        document=document,
    )


@lru_cache(maxsize=1)
def _entries() -> tuple:
    with open(INDEX_PATH, encoding="utf-8") as fh:
        index = yaml.safe_load(fh)
    entries = tuple(_load_entry(raw) for raw in index["entries"])
    logger.debug("catalog_loaded", entries=len(entries))
    return entries


def catalog() -> List[CatalogEntry]:
    """All built-in entries, in index order."""
    return list(_entries())


def lookup(name: str) -> CatalogEntry:
    """
    Find an entry by name.

    Raises:
        NotFound: no entry has that name
    """
    for entry in _entries():
        if entry.name == name:
            return entry
    raise NotFound(f"no catalog entry named {name!r}; known: {', '.join(e.name for e in _entries())}")


def export_entry(name: str, fmt: str = "dsl") -> str:
    """
    Document text of an entry.

    The DSL form is the embedded file byte for byte.

    Raises:
        NotFound: unknown entry, or the entry ships without a word
    """
    entry = lookup(name)
    if not entry.has_word:
        raise NotFound(f"catalog entry {name!r} is invariant-only and has no document")
    if fmt == "dsl":
        return (DOCUMENTS_DIR / entry.document).read_text(encoding="utf-8")
    return serialize(entry.factorization, fmt)
