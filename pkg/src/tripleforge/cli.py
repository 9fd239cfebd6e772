"""``tripleforge`` command line: ``triples``, ``relate`` and ``verify``.

Exit codes: 0 success or clean, 1 internal error, 2 usage error,
3 power-relation paths disagree, 4 verification found discrepancies.
"""

from __future__ import annotations

import argparse
import csv
import os
import re
import sys
from typing import Sequence, TextIO

from tripleforge import records
from tripleforge.chatetus import LParity, Mode, triples_with_leg
from tripleforge.oracle import SweepLimitExceeded, cross_check, sweep_limit
from tripleforge.power_relations import PATH_NAMES, relate

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_DISAGREE = 3
EXIT_DISCREPANCY = 4

_RANGE = re.compile(r"^\s*(\d+)\s*\.\.\s*(\d+)\s*$")


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def parse_range(text: str) -> tuple[int, int]:
    """Parse an inclusive ``A..B`` range."""
    match = _RANGE.match(text)
    if not match:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripleforge",
        description="Pythagorean triples with a prescribed leg, and power relations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json", "csv"), default="table")

    enum_opts = argparse.ArgumentParser(add_help=False)
    enum_opts.add_argument(
        "--mode", choices=[m.value for m in Mode], default=Mode.CORRECTED.value
    )
    enum_opts.add_argument(
        "--interpretation",
        choices=[i.value for i in LParity],
        default=LParity.ODD.value,
        help="which l may appear in the even-leg set (paper-strict mode only)",
    )

    p = sub.add_parser("triples", parents=[fmt, enum_opts], help="list triples with leg X")
    p.add_argument("x", type=_positive_int)
    p.add_argument("--primitive-only", action="store_true")

    p = sub.add_parser("relate", parents=[fmt], help="triple on X**M from the triple on X")
    p.add_argument("x", type=_positive_int)
    p.add_argument("m", type=_positive_int)
    p.add_argument("--show-paths", action="store_true")

    p = sub.add_parser("verify", parents=[fmt, enum_opts], help="cross-check against brute force")
    p.add_argument("range", type=parse_range, metavar="A..B")
    p.add_argument("--jobs", type=_positive_int, default=os.cpu_count() or 1)
    p.add_argument(
        "--parity",
        choices=("all", "odd", "even"),
        default="all",
        help="restrict the sweep to odd or even legs",
    )
    return parser


def _cmd_triples(args: argparse.Namespace, out: TextIO) -> int:
    triples = triples_with_leg(args.x, Mode(args.mode), LParity(args.interpretation))
    if args.primitive_only:
        triples = [t for t in triples if t.primitive]
    if args.format == "json":
        for t in triples:
            print(records.dumps(t), file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(records.CSV_FIELDS["triple"])
        writer.writerows(records.csv_row(t) for t in triples)
    else:
        for t in triples:
            kind = "primitive" if t.primitive else "non-primitive"
            print(f"{t.x} {t.y} {t.z} d={t.d} {kind}", file=out)
    return EXIT_OK


def _cmd_relate(args: argparse.Namespace, out: TextIO) -> int:
    try:
        report = relate(args.x, args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(records.dumps(report, paths=args.show_paths), file=out)
    elif args.format == "csv":
        header = list(records.CSV_FIELDS["relation"])
        row = records.csv_row(report)
        if args.show_paths:
            for name in PATH_NAMES:
                header += [f"{name}_y_prime", f"{name}_z_prime"]
                row += [str(v) for v in report.paths[name]]
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerow(row)
    else:
        status = "agreed" if report.agreed else "DISAGREE"
        print(f"x={report.x} m={report.m} y'={report.y_prime} z'={report.z_prime} {status}", file=out)
        if args.show_paths:
            for name in PATH_NAMES:
                y, z = report.paths[name]
                print(f"  {name:<12} y'={y} z'={z}", file=out)
    return EXIT_OK if report.agreed else EXIT_DISAGREE


def _cmd_verify(args: argparse.Namespace, out: TextIO, err: TextIO) -> int:
    lo, hi = args.range
    limit = sweep_limit()
    if hi > limit:
        raise UsageError(f"upper bound {hi} exceeds sweep limit {limit}")
    legs = range(lo, hi + 1)
    if args.parity == "odd":
        legs = range(lo | 1, hi + 1, 2)
    elif args.parity == "even":
        legs = range(lo + (lo & 1), hi + 1, 2)
    if not legs:
        raise UsageError(f"no {args.parity} legs in {lo}..{hi}")
    try:
        report = cross_check(
            legs, Mode(args.mode), LParity(args.interpretation), jobs=args.jobs, limit=limit
        )
    except SweepLimitExceeded as exc:
        raise UsageError(str(exc)) from None

    if args.format == "json":
        for e in report.entries:
            print(records.dumps(e), file=out)
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(records.CSV_FIELDS["discrepancy"])
        writer.writerows(records.csv_row(e) for e in report.entries)
    else:
        for e in report.entries:
            for t in e.missing:
                print(f"x={e.x} missing {t.x} {t.y} {t.z} d={t.d}", file=out)
            for r in e.spurious:
                print(f"x={e.x} spurious d={r.d} {r.reason}", file=out)
    summary = (
        f"{'clean' if report.clean else 'NOT clean'}: {report.legs_checked} legs in "
        f"{report.lo}..{report.hi}, mode={report.mode.value}"
    )
    if report.mode is Mode.PAPER_STRICT:
        summary += f", interpretation={report.interpretation.value}"
    if not report.clean:
        summary += f", {len(report.entries)} legs differ"
    print(summary, file=out if args.format == "table" else err)
    return EXIT_OK if report.clean else EXIT_DISCREPANCY


def main(
    argv: Sequence[str] | None = None,
    out: TextIO | None = None,
    err: TextIO | None = None,
) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "triples":
            return _cmd_triples(args, out)
        if args.command == "relate":
            return _cmd_relate(args, out)
        return _cmd_verify(args, out, err)
    except UsageError as exc:
        print(f"tripleforge {args.command}: error: {exc}", file=err)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"tripleforge: internal error: {exc!r}", file=err)
        return EXIT_INTERNAL


def run() -> None:
    sys.exit(main())
