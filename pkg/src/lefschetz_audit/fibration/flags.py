"""Ground-truth assumptions the tool cannot decide on its own."""

from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Any, Dict, Optional

from ..errors import InconsistentInput

KODAIRA_VALUES = ("-inf", "0", "1", "2")

# document key -> field name
DOCUMENT_KEYS = {"ruling_base_genus": "ruled_base_genus"}


class Tristate(str, Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"

    @classmethod
    def coerce(cls, value: Any) -> "Tristate":
        if isinstance(value, cls):
            return value
        if value is None:
            return cls.UNKNOWN
        if isinstance(value, bool):
            return cls.TRUE if value else cls.FALSE
        return cls(str(value).lower())


@dataclass(frozen=True)
class GroundTruthFlags:
    """Hypotheses consumed by the inequality suite.

    ``kodaira_dimension`` is one of "-inf", "0", "1", "2" when known.
    """
    rational_or_ruled: Tristate = Tristate.UNKNOWN
    ruled_base_genus: Optional[int] = None
    blowup_of_sphere_bundle: Tristate = Tristate.UNKNOWN
    known_manifold: Optional[str] = None
    kodaira_dimension: Optional[str] = None
    relatively_minimal: Tristate = Tristate.UNKNOWN

    def __post_init__(self):
        for name in ("rational_or_ruled", "blowup_of_sphere_bundle", "relatively_minimal"):
            object.__setattr__(self, name, Tristate.coerce(getattr(self, name)))
        if self.ruled_base_genus is not None:
            if self.rational_or_ruled is not Tristate.TRUE:
                raise InconsistentInput("ruled_base_genus requires rational_or_ruled = true")
            if self.ruled_base_genus < 0:
                raise InconsistentInput("ruled_base_genus must be nonnegative")
        if (self.blowup_of_sphere_bundle is Tristate.TRUE
                and self.rational_or_ruled is Tristate.FALSE):
            raise InconsistentInput("a blowup of a sphere bundle is rational or ruled")
        if self.kodaira_dimension is not None:
            value = str(self.kodaira_dimension)
            if value not in KODAIRA_VALUES:
                raise InconsistentInput(f"kodaira_dimension must be one of {KODAIRA_VALUES}")
            object.__setattr__(self, "kodaira_dimension", value)

    @classmethod
    def from_mapping(cls, data: Dict[str, Any]) -> "GroundTruthFlags":
        """Build from a ``flags`` block; document keys are accepted under their field names too."""
        known = {f.name for f in fields(cls)}
        values: Dict[str, Any] = {}
        for key, value in data.items():
            name = DOCUMENT_KEYS.get(key, key)
            if name in values:
                raise InconsistentInput(f"flag '{name}' given twice (as '{key}')")
            values[name] = value
        unknown = set(values) - known
        if unknown:
            raise InconsistentInput(f"unknown flag(s): {', '.join(sorted(unknown))}")
        return cls(**values)

    def to_mapping(self) -> Dict[str, Any]:
        """Non-default fields only, in declaration order."""
        out: Dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value == f.default:
                continue
            out[f.name] = value.value if isinstance(value, Tristate) else value
        return out

    def to_document(self) -> Dict[str, Any]:
        """``to_mapping`` under the keys written in documents."""
        names = {v: k for k, v in DOCUMENT_KEYS.items()}
        return {names.get(k, k): v for k, v in self.to_mapping().items()}

    def overridden_by(self, other: "GroundTruthFlags") -> "GroundTruthFlags":
        """Fields set in ``other`` win over the ones in this object."""
        return replace(self, **other.to_mapping())
