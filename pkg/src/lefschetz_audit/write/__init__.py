"""Report rendering."""

from .report_writer import FORMATS, ReportWriter, check_line, dump_json, report_lines

__all__ = ["FORMATS", "ReportWriter", "check_line", "dump_json", "report_lines"]
