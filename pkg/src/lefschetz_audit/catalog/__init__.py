"""Built-in anchor fibrations, their validation and fiber sums."""

from .fibersum import fiber_sum
from .registry import CatalogEntry, catalog, export_entry, lookup
from .validate import Discrepancy, completed_expected, expected_report, validate_entry

__all__ = [
    "CatalogEntry",
    "Discrepancy",
    "catalog",
    "completed_expected",
    "expected_report",
    "export_entry",
    "fiber_sum",
    "lookup",
    "validate_entry",
]
