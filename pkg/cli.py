# -*- coding: utf-8 -*-
"""
Command-line front end.

Commands
--------
- ``validate``:  invariants n, e, l and the alpha table of an instance
- ``lct``:       full report (lex-normalizes first and records the permutation)
- ``poles``:     candidate poles of the motivic zeta function
- ``normalize``: lex-normalized exponents and the permutation applied
- ``invert``:    exponents of the normalized branch when lambda_1 = (1/n_1, 0, ..., 0)
- ``verify``:    property suite on one instance (``--input``) or a seeded corpus
- ``generate``:  seeded random valid instances

Instance documents are JSON with rationals as strings::

    {"d": 2, "exponents": [["1/3", "1/3"], ["7/6", "2/3"]]}

Output is deterministic JSON (sorted keys, no timestamps). Exit status is 0 on
success, 1 when a verification check fails, 2 on invalid input and 3 on an
internal inconsistency. The tool reads no environment variables.
"""

import argparse
import json
import logging
import sqlite3
import sys
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

import db
from arith import ExponentVector, format_rational, parse_rational
from errors import (
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    InvalidDimension,
    IOFailure,
    MalformedDocument,
    NegativeCoordinate,
    QoLctError,
    RaggedRows,
)
from exponents import CharExponents, DerivedInvariants, invert, is_lex_ordered, is_normalized, lex_normalize, validate
from lct import PoleTable, compute_report, minimizers
from storage import read_input, write_output
from verify import CorpusConfig, corpus_items, generate_random, run_corpus, verify_instance

logger = logging.getLogger(__name__)

COMMANDS = ("validate", "lct", "poles", "normalize", "invert", "verify", "generate")


# ---------------------------------------------------------------------
# DOCUMENTS
# ---------------------------------------------------------------------
@dataclass(frozen=True)
class InstanceDocument:
    d: int
    exponents: Tuple[Tuple[str, ...], ...]

    def to_char_exponents(self) -> CharExponents:
        rows = []
        for j, row in enumerate(self.exponents):
            rows.append(ExponentVector(tuple(
                parse_rational(x, locus=f"exponents[{j}][{i}]") for i, x in enumerate(row)
            )))
        return CharExponents(self.d, tuple(rows))

    def to_dict(self) -> Dict[str, Any]:
        return {"d": self.d, "exponents": [list(r) for r in self.exponents]}


def parse_instance(text) -> InstanceDocument:
    """Decode and check an instance document; errors carry a line or field locus."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"not UTF-8: {exc.reason}", locus=f"byte {exc.start}")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(exc.msg, locus=f"line {exc.lineno}, column {exc.colno}")
    if not isinstance(raw, dict):
        raise MalformedDocument("instance document must be a JSON object", locus="$")

    d = raw.get("d")
    if isinstance(d, bool) or not isinstance(d, int):
        raise InvalidDimension(f"d must be an integer, got {d!r}", locus="d")
    if d < 1:
        raise InvalidDimension(f"d must be >= 1, got {d}", locus="d")

    rows = raw.get("exponents")
    if not isinstance(rows, list):
        raise MalformedDocument("exponents must be a list of rows", locus="exponents")
    out = []
    for j, row in enumerate(rows):
        if not isinstance(row, list):
            raise MalformedDocument("each exponent must be a list", locus=f"exponents[{j}]")
        if len(row) != d:
            raise RaggedRows(f"row has {len(row)} entries, expected d = {d}", locus=f"exponents[{j}]")
        for i, x in enumerate(row):
            value = parse_rational(x, locus=f"exponents[{j}][{i}]")
            if value < 0:
                raise NegativeCoordinate(f"negative coordinate {x!r}", locus=f"exponents[{j}][{i}]")
        out.append(tuple(format_rational(parse_rational(x)) for x in row))
    doc = InstanceDocument(d, tuple(out))
    try:
        doc.to_char_exponents()
    except QoLctError as exc:
        exc.locus = exc.locus or "exponents"
        raise
    return doc


def instance_doc(ce: CharExponents) -> Dict[str, Any]:
    return {"d": ce.d, "exponents": ce.to_rows()}


def _fracs(values) -> List[str]:
    return [format_rational(x) for x in values]


def invariants_doc(inv: DerivedInvariants) -> Dict[str, Any]:
    return {
        "invariants": {"n": list(inv.n), "e": list(inv.e), "ell": list(inv.ell)},
        "alpha": [[{"p": p, "q": q} for p, q in row] for row in inv.alpha],
    }


def table_doc(table: Optional[PoleTable]) -> List[List[Dict[str, int]]]:
    if table is None:
        return []
    return [[{"b": b, "B": B} for b, B in row] for row in table.pairs]


def _opt(x) -> Optional[str]:
    return None if x is None else format_rational(x)


# ---------------------------------------------------------------------
# COMMANDS
# ---------------------------------------------------------------------
def cmd_validate(doc: InstanceDocument, args) -> Tuple[Dict[str, Any], int]:
    ce = doc.to_char_exponents()
    inv = validate(ce)
    warnings = []
    if ce.is_smooth:
        warnings.append("smooth instance")
    elif not is_lex_ordered(ce):
        warnings.append("input is not lex-ordered")
    out = {
        "input": doc.to_dict(),
        "lex_ordered": is_lex_ordered(ce),
        "normalized": is_normalized(ce),
        "warnings": warnings,
    }
    out.update(invariants_doc(inv))
    return out, EXIT_OK


def cmd_lct(doc: InstanceDocument, args) -> Tuple[Dict[str, Any], int]:
    analysis = compute_report(doc.to_char_exponents())
    report, table = analysis.report, analysis.table
    out = {
        "input": doc.to_dict(),
        "normalized_input": instance_doc(analysis.normalized),
        "permutation": list(report.permutation),
        "bB": table_doc(table),
        "candidate_set": _fracs(table.candidate_set) if table else [],
        "minimizers": [list(pos) for pos in minimizers(table)] if table else [],
        "A": {"A1": _opt(report.a1), "A2": _opt(report.a2), "A3": _opt(report.a3)},
        "lct": format_rational(report.lct),
        "case_tag": report.case_tag.value,
        "log_canonical": report.log_canonical,
        "pole_candidates": _fracs(report.pole_candidates),
        "warnings": list(analysis.warnings),
    }
    out.update(invariants_doc(analysis.invariants))
    return out, EXIT_OK


def cmd_poles(doc: InstanceDocument, args) -> Tuple[Dict[str, Any], int]:
    analysis = compute_report(doc.to_char_exponents())
    table = analysis.table
    return {
        "input": doc.to_dict(),
        "permutation": list(analysis.report.permutation),
        "candidate_set": _fracs(table.candidate_set) if table else [],
        "pole_candidates": _fracs(analysis.report.pole_candidates),
        "warnings": list(analysis.warnings),
    }, EXIT_OK


def cmd_normalize(doc: InstanceDocument, args) -> Tuple[Dict[str, Any], int]:
    ce = doc.to_char_exponents()
    normalized, permutation = lex_normalize(ce)
    validate(normalized)
    return {
        "input": doc.to_dict(),
        "normalized_input": instance_doc(normalized),
        "permutation": list(permutation),
        "normalized": is_normalized(normalized),
        "warnings": [] if permutation == tuple(range(1, ce.d + 1)) else ["input was not lex-ordered; permutation applied"],
    }, EXIT_OK


def cmd_invert(doc: InstanceDocument, args) -> Tuple[Dict[str, Any], int]:
    normalized, permutation = lex_normalize(doc.to_char_exponents())
    inverted = invert(normalized)
    warnings = ["smooth instance"] if inverted.is_smooth else []
    return {
        "input": doc.to_dict(),
        "permutation": list(permutation),
        "inverted": instance_doc(inverted),
        "warnings": warnings,
    }, EXIT_OK


def _corpus_config(args) -> CorpusConfig:
    return CorpusConfig(
        count=args.count,
        seed=args.seed,
        d=args.d,
        g=args.g,
        max_denominator=args.max_den,
        max_integer_part=args.max_int,
        forced_fraction=args.forced_fraction,
        workers=args.workers,
    )


def cmd_verify(doc: Optional[InstanceDocument], args) -> Tuple[Dict[str, Any], int]:
    if doc is not None:
        report = verify_instance(doc.to_char_exponents(), instance_id="input")
        return report.to_dict(), EXIT_OK if report.ok else EXIT_VERIFICATION_FAILED
    corpus = run_corpus(_corpus_config(args))
    return corpus.to_dict(), EXIT_OK if corpus.ok else EXIT_VERIFICATION_FAILED


def cmd_generate(doc: Optional[InstanceDocument], args) -> Tuple[Dict[str, Any], int]:
    cfg = _corpus_config(args)
    instances = []
    for instance_id, gen in corpus_items(cfg):
        item = instance_doc(generate_random(gen))
        item["instance_id"] = instance_id
        instances.append(item)
    config = asdict(cfg)
    config.pop("workers")
    return {"config": config, "instances": instances}, EXIT_OK


HANDLERS = {
    "validate": cmd_validate,
    "lct": cmd_lct,
    "poles": cmd_poles,
    "normalize": cmd_normalize,
    "invert": cmd_invert,
    "verify": cmd_verify,
    "generate": cmd_generate,
}


def run(command: str, doc: Optional[InstanceDocument], args) -> Tuple[Dict[str, Any], int]:
    return HANDLERS[command](doc, args)


# ---------------------------------------------------------------------
# ARGUMENTS
# ---------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE", help="instance document (default: stdin)")
    common.add_argument("--output", metavar="FILE", help="report destination (default: stdout)")
    common.add_argument("--archive", metavar="DB", help="also store the report in this sqlite archive")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug (stderr)")

    corpus = argparse.ArgumentParser(add_help=False)
    corpus.add_argument("--count", type=int, default=100, help="number of generated instances")
    corpus.add_argument("--seed", type=int, default=0, help="master seed")
    corpus.add_argument("--d", type=int, default=None, help="dimension (default: drawn from 1..4)")
    corpus.add_argument("--g", type=int, default=None, help="depth (default: drawn from 1..4)")
    corpus.add_argument("--max-den", type=int, default=12, help="largest increment denominator")
    corpus.add_argument("--max-int", type=int, default=2, help="largest increment integer part")
    corpus.add_argument("--forced-fraction", type=float, default=0.2,
                        help="share of instances with lambda_1 = (1/k, 0, ..., 0)")
    corpus.add_argument("--workers", type=int, default=1, help="processes for verify")

    parser = argparse.ArgumentParser(
        prog="qolct",
        description="Log canonical thresholds of irreducible quasi-ordinary singularities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check an instance and print its invariants")
    sub.add_parser("lct", parents=[common], help="full lct report")
    sub.add_parser("poles", parents=[common], help="candidate poles of the motivic zeta function")
    sub.add_parser("normalize", parents=[common], help="lex-normalize the variables")
    sub.add_parser("invert", parents=[common], help="inversion for lambda_1 = (1/n_1, 0, ..., 0)")
    sub.add_parser("verify", parents=[common, corpus], help="property suite on an instance or a corpus")
    sub.add_parser("generate", parents=[common, corpus], help="seeded random valid instances")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def dumps(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _archive(args, doc: Optional[InstanceDocument], result: Dict[str, Any], status: int) -> None:
    try:
        db.init_db(args.archive)
        report_id = db.archive_report(
            args.command, doc.to_dict() if doc else None, result, status=status, db_path=args.archive
        )
        db.log_run(args.command, report_id=report_id, details=f"exit {status}", db_path=args.archive)
    except (sqlite3.Error, OSError) as e:
        raise IOFailure(f"cannot write archive: {e}", locus=args.archive) from e


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    try:
        doc = None
        if args.command not in ("verify", "generate") or args.input is not None:
            doc = parse_instance(read_input(args.input))
        result, status = run(args.command, doc, args)
        write_output(dumps(result), args.output)
        if args.archive:
            _archive(args, doc, result, status)
        return status
    except QoLctError as exc:
        logger.debug("failed with %s", exc.code, exc_info=True)
        sys.stderr.write(dumps(exc.to_dict()))
        return exc.exit_status


if __name__ == "__main__":
    sys.exit(main())
