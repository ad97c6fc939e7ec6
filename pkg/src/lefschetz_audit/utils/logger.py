"""Structured logging: one JSON object per line on stderr, stdout carries reports only."""

import logging
import sys

import structlog

# no timestamp processor: the same input logs the same lines
PROCESSORS = [
    structlog.stdlib.filter_by_level,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.add_log_level,
    structlog.processors.StackInfoRenderer(),
    structlog.processors.format_exc_info,
    structlog.processors.JSONRenderer(sort_keys=True),
]


def _configure_structlog():
    structlog.configure(
        processors=PROCESSORS,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )


def setup_logging(level: str = "WARNING"):
    """Send log lines to stderr at ``level``.

    Without this call the package still logs WARNING and above to stderr.

    Args:
        level: Logging level (INFO, DEBUG, etc.)
    """
    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=level.upper(),
        force=True,
    )


def get_logger(name: str):
    return structlog.get_logger(name)


_configure_structlog()
