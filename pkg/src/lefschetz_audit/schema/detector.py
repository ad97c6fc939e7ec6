"""Format detection for factorization documents."""

from typing import Optional

from ..utils.logger import get_logger

logger = get_logger(__name__)


class FormatDetector:
    """Tells the description language apart from the JSON form."""

    FORMATS = {
        "dsl": "Factorization description language (.lf)",
        "json": "JSON document (.json)",
    }

    EXTENSIONS = {".lf": "dsl", ".json": "json"}

    def __init__(self):
        self.logger = logger

    def detect_format(self, text: str, path: Optional[str] = None) -> str:
        """
        Detect the format of a document.

        Args:
            text: Document text
            path: Optional file name; a known extension wins over content sniffing

        Returns:
            str: "dsl" or "json"
        """
        if path:
            for ext, fmt in self.EXTENSIONS.items():
                if path.lower().endswith(ext):
                    self.logger.debug("format_from_extension", path=path, format=fmt)
                    return fmt
        stripped = text.lstrip()
        fmt = "json" if stripped[:1] in ("{", "[") else "dsl"
        self.logger.debug("format_from_content", format=fmt)
        return fmt
