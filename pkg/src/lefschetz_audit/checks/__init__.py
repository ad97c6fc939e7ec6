"""Registry of audited inequalities and identities."""

from typing import Dict, List, Type

from ..errors import NotFound
from .base import CheckContext, CheckResult, Clause, InequalityCheck

_check_registry: Dict[str, Type[InequalityCheck]] = {}


def register_check(check_id: str):
    """Decorator to register a check under its id."""
    def wrapper(cls: Type[InequalityCheck]):
        if check_id in _check_registry:
            raise ValueError(f"check id {check_id!r} registered twice")
        cls.check_id = check_id
        _check_registry[check_id] = cls
        return cls
    return wrapper


def get_check(check_id: str) -> InequalityCheck:
    """Return a check instance by id."""
    cls = _check_registry.get(check_id)
    if cls is None:
        raise NotFound(f"unknown check {check_id!r}")
    return cls()


def available_checks() -> List[str]:
    return sorted(_check_registry)


# Import the check modules to register them
from . import bounds, hodge, informational, lemmas  # noqa: E402,F401
from .suite import run_checks  # noqa: E402

__all__ = [
    "CheckContext",
    "CheckResult",
    "Clause",
    "InequalityCheck",
    "available_checks",
    "get_check",
    "register_check",
    "run_checks",
]
