"""Document format detection."""

from .detector import FormatDetector

__all__ = ["FormatDetector"]
