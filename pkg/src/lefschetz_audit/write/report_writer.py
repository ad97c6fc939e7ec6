"""Text and JSON rendering of reports, check results and catalog listings."""

import json
from typing import Any, Dict, Iterable, List, Optional, TextIO

from ..checks.base import CheckResult, render_value
from ..invariants import REPORT_FIELDS, InvariantReport
from ..utils.logger import get_logger

logger = get_logger(__name__)

FORMATS = ("text", "json")


def dump_json(obj: Any) -> str:
    """Deterministic JSON: sorted keys, fixed indentation."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_lines(rep: InvariantReport) -> List[str]:
    lines = [f"name: {rep.name}"] if rep.name else []
    lines.append(f"fiber_genus: {rep.fiber_genus}")
    lines.append(f"base_genus: {rep.base_genus}")
    values = rep.to_dict()
    for key in REPORT_FIELDS:
        value = values[key]
        if value is None:
            value = "n/a"
        elif isinstance(value, list):
            value = "[" + ", ".join(str(v) for v in value) + "]"
        lines.append(f"{key}: {value}")
    return lines


def check_line(result: CheckResult) -> str:
    """``[PASS|FAIL|N/A] check_id lhs ⋈ rhs — citation``"""
    if result.applicable:
        body = f"{render_value(result.lhs)} {result.relation} {render_value(result.rhs)}"
    else:
        body = result.reason
    line = f"[{result.status}] {result.check_id} {body} — {result.citation}"
    extras = [e for e in (result.note, "informational" if result.informational else "") if e]
    if extras:
        line += f" ({'; '.join(extras)})"
    return line


def failed_clauses(result: CheckResult) -> List[str]:
    return [
        f"    violated: {c.label}: {render_value(c.lhs)} {c.relation} {render_value(c.rhs)}"
        for c in result.clauses if not c.holds
    ]


class ReportWriter:
    """Writes results in the selected format to a stream."""

    def __init__(self, stream: TextIO, fmt: str = "text"):
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.stream = stream
        self.fmt = fmt

    def _emit(self, text: str):
        self.stream.write(text if text.endswith("\n") else text + "\n")

    def write_report(self, rep: InvariantReport):
        if self.fmt == "json":
            self._emit(dump_json(rep.to_dict()))
        else:
            self._emit("\n".join(report_lines(rep)))

    def write_checks(self, rep: InvariantReport, results: Iterable[CheckResult]):
        results = list(results)
        if self.fmt == "json":
            self._emit(dump_json({
                "report": rep.to_dict(),
                "checks": [r.to_dict() for r in results],
            }))
            return
        lines = report_lines(rep) + [""]
        for r in results:
            lines.append(check_line(r))
            lines.extend(failed_clauses(r))
        failed = [r.check_id for r in results if r.failed]
        lines.append("")
        lines.append(f"{len(failed)} failed: {', '.join(failed)}" if failed else "all applicable checks hold")
        self._emit("\n".join(lines))

    def write_records(self, records: List[Dict[str, Any]], text_lines: List[str]):
        """Emit structured records as JSON, or the given lines as text."""
        if self.fmt == "json":
            self._emit(dump_json(records))
        else:
            self._emit("\n".join(text_lines) if text_lines else "")

    def write_text(self, text: str, record: Optional[Dict[str, Any]] = None):
        if self.fmt == "json" and record is not None:
            self._emit(dump_json(record))
        else:
            self._emit(text)
