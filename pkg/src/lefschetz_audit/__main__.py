"""Command-line entry point: ``python -m lefschetz_audit <command> ...``"""

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, TextIO

from . import __version__
from .catalog import catalog, expected_report, export_entry, fiber_sum, lookup, validate_entry
from .checks import available_checks, run_checks
from .config import Settings
from .errors import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_PARSE,
    InconsistentInput,
    LefschetzAuditError,
    ParseError,
    WrongBaseGenus,
)
from .fibration import Factorization, GroundTruthFlags, Tristate
from .invariants import InvariantReport, compute_report
from .parsers import SourceDocument, parse, serialize
from .search import SearchSpec, parse_generator_spec, search_min_relators
from .utils.logger import get_logger, setup_logging
from .write import ReportWriter

logger = get_logger(__name__)

ASSUMPTION_HELP = (
    "not-rational-ruled | rational-or-ruled | unknown | ruled-base-genus=H | "
    "blowup-of-sphere-bundle | kodaira-dimension=K (repeatable)"
)


def assumed_flags(values: Optional[List[str]], base: Optional[GroundTruthFlags] = None) -> GroundTruthFlags:
    """
    Apply ``--assume`` values on top of the document flags.

    An explicit assumption always wins, including ``unknown``. Moving
    ``rational_or_ruled`` away from true drops the document flags that only
    make sense for rational or ruled surfaces (ruled base genus, sphere-bundle
    blowup, Kodaira dimension -inf) unless they are assumed explicitly.

    Raises:
        InconsistentInput: unknown assumption or contradictory combination
    """
    fields = {}
    for raw in values or []:
        for item in filter(None, (part.strip() for part in raw.split(","))):
            key, _, value = item.partition("=")
            if item == "not-rational-ruled":
                fields["rational_or_ruled"] = Tristate.FALSE
            elif item == "rational-or-ruled":
                fields["rational_or_ruled"] = Tristate.TRUE
            elif item == "unknown":
                fields["rational_or_ruled"] = Tristate.UNKNOWN
            elif item == "blowup-of-sphere-bundle":
                fields["blowup_of_sphere_bundle"] = Tristate.TRUE
            elif key == "ruled-base-genus" and value.isdigit():
                fields["ruled_base_genus"] = int(value)
                fields.setdefault("rational_or_ruled", Tristate.TRUE)
            elif key == "kodaira-dimension" and value:
                fields["kodaira_dimension"] = value
            else:
                raise InconsistentInput(f"unknown assumption {item!r}; expected {ASSUMPTION_HELP}")
    base = base or GroundTruthFlags()
    if fields.get("rational_or_ruled", Tristate.TRUE) is not Tristate.TRUE:
        fields.setdefault("ruled_base_genus", None)
        if base.blowup_of_sphere_bundle is Tristate.TRUE:
            fields.setdefault("blowup_of_sphere_bundle", Tristate.UNKNOWN)
        if base.kodaira_dimension == "-inf":
            fields.setdefault("kodaira_dimension", None)
    return replace(base, **fields)


def load_factorization(path: str) -> Factorization:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise FileNotFoundError(f"cannot read {path}: {e.strerror}") from None
    return parse(SourceDocument.from_bytes(data, path))


def build_report(f: Factorization, args, require_sigma: bool) -> InvariantReport:
    if f.base_genus > 0 and args.sigma is None and require_sigma:
        raise WrongBaseGenus(
            f"base genus is {f.base_genus}: Betti numbers are only derived over the sphere; "
            "pass --sigma for the partial report"
        )
    return compute_report(f, sigma=args.sigma, workers=args.workers)


def cmd_invariants(args, out: TextIO) -> int:
    f = load_factorization(args.file)
    ReportWriter(out, args.format).write_report(build_report(f, args, require_sigma=True))
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    f = load_factorization(args.file)
    rep = build_report(f, args, require_sigma=False)
    flags = assumed_flags(args.assume, f.flags)
    selection = None
    if args.suite:
        selection = [s.strip() for raw in args.suite for s in raw.split(",") if s.strip()]
    results = run_checks(rep, f.fiber_genus, f.base_genus, flags, selection)
    ReportWriter(out, args.format).write_checks(rep, results)
    return EXIT_CHECK_FAILED if any(r.failed for r in results) else EXIT_OK


def cmd_catalog(args, out: TextIO) -> int:
    writer = ReportWriter(out, args.format)
    if args.catalog_command == "list":
        entries = catalog()
        writer.write_records(
            [{"name": e.name, "fiber_genus": e.fiber_genus, "base_genus": e.base_genus,
              "has_word": e.has_word} for e in entries],
            [f"{e.name:<14} g={e.fiber_genus} h={e.base_genus} "
             f"{'word l=' + str(e.factorization.length) if e.has_word else 'invariant-only'}"
             for e in entries],
        )
        return EXIT_OK

    if args.catalog_command == "show":
        e = lookup(args.name)
        record = {
            "name": e.name,
            "has_word": e.has_word,
            "fiber_genus": e.fiber_genus,
            "base_genus": e.base_genus,
            "expected": {k: str(v) if not isinstance(v, (int, list)) else v for k, v in e.expected.items()},
            "provenance": e.provenance,
            "flags": e.flags.to_document(),
        }
        lines = [f"name: {e.name}", f"fiber_genus: {e.fiber_genus}", f"base_genus: {e.base_genus}"]
        if e.has_word:
            lines.append("word: " + " ".join(e.factorization.word))
        else:
            lines.append("word: none (invariant-only)")
        for key, value in e.flags.to_document().items():
            lines.append(f"flag {key}: {value}")
        for key, value in e.expected.items():
            tag = e.provenance.get(key, "")
            lines.append(f"expected {key} = {value}" + (f"  {tag}" if tag else ""))
        writer.write_text("\n".join(lines), record)
        return EXIT_OK

    if args.catalog_command == "verify":
        return verify_catalog(writer, args.name, args.word)

    if args.catalog_command == "export":
        text = export_entry(args.name, args.doc_format)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            logger.info("catalog_entry_exported", name=args.name, path=args.output)
        else:
            out.write(text)
        return EXIT_OK
    raise AssertionError(args.catalog_command)


def verify_catalog(writer: ReportWriter, name: Optional[str] = None, word: Optional[str] = None) -> int:
    if word and not name:
        raise InconsistentInput("--word needs the name of the entry it should realize")
    entries = [lookup(name)] if name else catalog()
    candidate = load_factorization(word) if word else None
    records, lines, status = [], [], EXIT_OK
    for entry in entries:
        problems = [str(d) for d in validate_entry(entry, factorization=candidate)]
        if candidate is not None:
            rep = compute_report(candidate)
        else:
            rep = compute_report(entry.factorization) if entry.has_word else expected_report(entry)
        if rep is not None:
            results = run_checks(rep, rep.fiber_genus, rep.base_genus, entry.flags)
            problems += [f"check {r.check_id} failed" for r in results if r.failed]
        if problems:
            status = EXIT_CHECK_FAILED
            lines.append(f"FAIL {entry.name}: " + "; ".join(problems))
        else:
            lines.append(f"OK {entry.name}")
        records.append({"name": entry.name, "ok": not problems, "problems": problems})
    writer.write_records(records, lines)
    return status


def cmd_fibersum(args, out: TextIO) -> int:
    f1 = load_factorization(args.first)
    f2 = load_factorization(args.second)
    result = fiber_sum(f1, f2, name=args.name)
    fmt = "json" if args.output.lower().endswith(".json") else "dsl"
    Path(args.output).write_text(serialize(result, fmt), encoding="utf-8")
    logger.info("fiber_sum_written", path=args.output, format=fmt)
    ReportWriter(out, args.format).write_report(compute_report(result, workers=args.workers))
    return EXIT_OK


def cmd_search(args, out: TextIO) -> int:
    settings = Settings.from_env(workers=args.workers, log_level=args.log_level)
    spec = SearchSpec(
        g=args.genus,
        generators=parse_generator_spec(args.curves),
        max_length=args.max_len,
        require_closed=not args.include_open,
    )
    hits = search_min_relators(spec, budget=settings.search_budget,
                               workers=settings.workers, progress=args.progress)
    lines = [
        f"{h.word_text}  l={h.report.l} closure={h.report.closure.value}"
        + (f" sigma={h.report.sigma}" if h.report.sigma is not None else "")
        for h in hits
    ] or [f"no words up to length {spec.max_length}"]
    ReportWriter(out, args.format).write_records(
        [{"word": list(h.word), "report": h.report.to_dict()} for h in hits], lines
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz_audit",
        description="Invariants and inequality audit for Lefschetz fibrations given by monodromy factorizations",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING", help="Logging level (DEBUG, INFO, WARNING, ...)")
    parser.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Compute the invariant report of a factorization")
    p.add_argument("file", help="Factorization document (.lf or .json)")
    p.add_argument("--sigma", type=int, help="Signature supplied by the caller for a positive-genus base")
    p.add_argument("--workers", type=int, default=1, help="Threads for the signature computation")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("check", help="Compute invariants and audit them against the inequality suite")
    p.add_argument("file", help="Factorization document (.lf or .json)")
    p.add_argument("--assume", action="append", help=ASSUMPTION_HELP)
    p.add_argument("--suite", action="append",
                   help=f"Comma-separated check ids (default all: {', '.join(available_checks())})")
    p.add_argument("--sigma", type=int, help="Signature supplied by the caller for a positive-genus base")
    p.add_argument("--workers", type=int, default=1, help="Threads for the signature computation")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("catalog", help="Built-in anchor fibrations")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    csub.add_parser("list", help="List entries")
    c = csub.add_parser("show", help="Show one entry")
    c.add_argument("name")
    c = csub.add_parser("verify", help="Validate every entry and run the checks on it")
    c.add_argument("name", nargs="?", help="Only this entry")
    c.add_argument("--word", help="Document whose report is compared with the entry (requires a name)")
    c = csub.add_parser("export", help="Write an entry's document")
    c.add_argument("name")
    c.add_argument("-o", "--output", help="Output path (stdout when omitted)")
    c.add_argument("--format", dest="doc_format", choices=["dsl", "json"], default="dsl",
                   help="Document format")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("fibersum", help="Fiber sum of two closed factorizations over the sphere")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", required=True, help="Output document (.json for JSON, DSL otherwise)")
    p.add_argument("--name", help="Name of the result")
    p.add_argument("--workers", type=int, default=1, help="Threads for the signature computation")
    p.set_defaults(handler=cmd_fibersum)

    p = sub.add_parser("search", help="Exhaustive search for short closed words")
    p.add_argument("--genus", type=int, required=True, help="Fiber genus")
    p.add_argument("--curves", required=True, help="Generators, e.g. 'a=(1,0),b=(0,1),c=sep:1'")
    p.add_argument("--max-len", type=int, required=True, help="Longest word to enumerate")
    p.add_argument("--workers", type=int, default=1, help="Threads sharding the first letter")
    p.add_argument("--include-open", action="store_true", help="Keep words that are not closed")
    p.add_argument("--progress", action="store_true", help="Progress bar on stderr")
    p.set_defaults(handler=cmd_search)
    return parser


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name, sys.argv[1:] when None
        out: Report stream, stdout by default
        err: Diagnostic stream, stderr by default

    Returns:
        Process exit code
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(args.log_level)
    logger.debug("command_started", command=args.command)
    try:
        return args.handler(args, out)
    except ParseError as e:
        for d in e.diagnostics:
            err.write(d.render(e.source) + "\n")
        return e.exit_code
    except LefschetzAuditError as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return e.exit_code
    except (FileNotFoundError, OSError) as e:
        err.write(f"error: {e}\n")
        return EXIT_PARSE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
