"""Runtime settings."""

import os
from dataclasses import dataclass

from .utils.logger import get_logger

logger = get_logger(__name__)

SEARCH_BUDGET_ENV = "LEFSCHETZ_SEARCH_BUDGET"
DEFAULT_SEARCH_BUDGET = 10_000_000


@dataclass
class Settings:
    """Settings shared by the CLI and the search oracle."""
    # Search Configuration
    search_budget: int = DEFAULT_SEARCH_BUDGET
    workers: int = 1

    # Logging
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, **overrides) -> "Settings":
        """Build settings, taking the search budget from the environment."""
        settings = cls(**overrides)
        raw = os.getenv(SEARCH_BUDGET_ENV)
        if raw:
            try:
                settings.search_budget = int(raw)
            except ValueError:
                logger.warning("ignoring_search_budget_env", value=raw)
        return settings
