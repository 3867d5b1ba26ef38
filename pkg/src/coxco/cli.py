"""``coxco`` command line.

Exit status: 0 success, 1 usage, 2 parse error, 3 not-applicable verdict
under ``--strict``, 4 internal inconsistency.  Every failure writes one line
``coxco: error: <Kind>: <message>`` to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from fractions import Fraction
from pathlib import Path

from coxco import report
from coxco.analyze import DEFAULT_MAX_RANK, RankTooLarge, decide_coherence
from coxco.curvature import ComplexError, GaussBonnetViolation, gauss_bonnet_report
from coxco.formats import (
    ParseError,
    parse_complex_file,
    parse_coxeter_file,
    parse_presentation_file,
)
from coxco.smallcancel.montecarlo import InvalidParameters, monte_carlo
from coxco.smallcancel.pieces import incoherence_certificate, piece_report

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_NOT_APPLICABLE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fail(code: int, kind: str, message: str) -> int:
    print(f"coxco: error: {kind}: {message}".replace("\n", " "), file=sys.stderr)
    return code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("lambda must be positive")
    return value


def _lengths(text: str) -> list[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad length list {text!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty length list")
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="coxco", description="Coherence of 2-dimensional Coxeter groups "
                                          "and small-cancellation incoherence certificates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="two-dimensionality, chi, finiteness and coherence")
    a.add_argument("file")
    a.add_argument("--format", choices=("json", "text"), default="text")
    a.add_argument("--witnesses", choices=("minimal", "first"), default="minimal")
    a.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    a.add_argument("--graph", choices=("presentation", "diagram"), default="presentation",
                   help="graph attached to a subset for the curvature criterion")
    a.add_argument("--strict", action="store_true",
                   help="exit 3 when the coherence theorem does not apply")
    a.add_argument("--timing", action="store_true", help="include wall-clock time")

    s = sub.add_parser("sc-check", help="pieces, C'(1/6) and the incoherence certificate")
    s.add_argument("file")
    s.add_argument("--lambda", dest="lam", type=_fraction, default=None)
    s.add_argument("--format", choices=("json", "text"), default="text")

    r = sub.add_parser("random", help="Monte Carlo over random presentations")
    r.add_argument("--gens", type=int, required=True)
    r.add_argument("--rels", type=int, required=True)
    r.add_argument("--lengths", type=_lengths, required=True)
    r.add_argument("--trials", type=int, required=True)
    r.add_argument("--seed", type=int, required=True)
    r.add_argument("--csv", default=None, help="write the table here instead of stdout")
    r.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $COXCO_THREADS or 1; 0 = all cores)")

    c = sub.add_parser("curvature", help="curvature and Gauss-Bonnet check of a .cx2 complex")
    c.add_argument("file")
    c.add_argument("--format", choices=("json", "text"), default="text")
    return p


def cmd_analyze(args) -> int:
    sys_ = parse_coxeter_file(_read(args.file))
    start = time.perf_counter()
    rep = decide_coherence(sys_, witnesses=args.witnesses, max_rank=args.max_rank,
                           convention=args.graph)
    seconds = time.perf_counter() - start if args.timing else None
    doc = report.analyze_document(sys_, rep, convention=args.graph,
                                  witnesses=args.witnesses, seconds=seconds)
    sys.stdout.write(report.dumps(doc) if args.format == "json" else report.analyze_text(doc))
    if args.strict and rep.verdict.kind == "not_applicable":
        return _fail(EXIT_NOT_APPLICABLE, "NotApplicable", rep.verdict.reason)
    return EXIT_OK


def cmd_sc_check(args) -> int:
    p = parse_presentation_file(_read(args.file))
    pieces = piece_report(p)
    cert = incoherence_certificate(p)
    doc = report.sc_document(p, pieces, cert, args.lam)
    sys.stdout.write(report.dumps(doc) if args.format == "json" else report.sc_text(doc))
    return EXIT_OK


def cmd_random(args) -> int:
    table = monte_carlo(args.gens, args.rels, args.lengths, args.trials, args.seed,
                        workers=args.workers)
    text = table.to_csv()
    if args.csv:
        Path(args.csv).write_text(text, encoding="utf-8")
        for row in table.rows:
            lo, hi = row.wilson()
            print(f"l={row.l} c16={row.c16_rate:.4f} no_pp={row.no_pp_rate:.4f} "
                  f"certified={row.certified_rate:.4f} [{lo:.4f}, {hi:.4f}] "
                  f"collisions={row.collisions}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_curvature(args) -> int:
    cx = parse_complex_file(_read(args.file))
    doc = report.curvature_doc(gauss_bonnet_report(cx))
    sys.stdout.write(report.dumps(doc) if args.format == "json" else report.curvature_text(doc))
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "sc-check": cmd_sc_check,
    "random": cmd_random,
    "curvature": cmd_curvature,
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="coxco: warning: %(message)s", level=logging.WARNING)
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "Usage", str(exc))
    except RankTooLarge as exc:
        return _fail(EXIT_USAGE, "RankTooLarge", str(exc))
    except InvalidParameters as exc:
        return _fail(EXIT_USAGE, "InvalidParameters", str(exc))
    except ParseError as exc:
        return _fail(EXIT_PARSE, exc.kind, str(exc))
    except GaussBonnetViolation as exc:
        return _fail(EXIT_INTERNAL, "GaussBonnetViolation", str(exc))
    except ComplexError as exc:
        return _fail(EXIT_PARSE, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
