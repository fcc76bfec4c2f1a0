"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 solver inconsistency,
3 verification or cross-check failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import compute_table
from .curves import elliptic_counts
from .errors import GWError, MalformedFile
from .exact import format_rational
from .genus1 import cross_check
from .golden import golden_rows
from .report import FORMATS, counts_csv, rows
from .table import GWTable

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_MISMATCH = 0, 1, 2, 3
GOLDEN_MAX_DEGREE = 5

log = logging.getLogger("gwcp3")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-degree", type=_positive, default=GOLDEN_MAX_DEGREE, metavar="N")
    common.add_argument("--format", choices=sorted(FORMATS), default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--cache", metavar="PATH",
                        help="table file to load before solving and update afterwards")
    common.add_argument("--workers", type=_positive, default=1, metavar="K")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = _Parser(prog="gwcp3",
                     description="Rational and elliptic Gromov-Witten invariants of CP^3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("compute", parents=[common], help="solve and print N0, N1 and curve counts")
    sub.add_parser("verify", parents=[common], help="recompute and diff against the published table")
    sub.add_parser("crosscheck", parents=[common], help="compare the two genus-1 relations")
    sub.add_parser("export", parents=[common],
                   help="write table.gwt, table.csv, table.json and counts.csv to --out DIR")
    return parser


def _solve(args) -> GWTable:
    table = None
    if args.cache and Path(args.cache).exists():
        table = GWTable.load(args.cache, keep_provenance=False)
        log.info("loaded %d entries from %s", len(table), args.cache)
    table = compute_table(args.max_degree, table, workers=args.workers)
    if args.cache:
        table.save(args.cache)
    return table


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    table = _solve(args)
    _emit(FORMATS[args.format](table, args.max_degree), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    top = min(args.max_degree, GOLDEN_MAX_DEGREE)
    table = compute_table(top, workers=args.workers)
    got = {(n, a, b): (g0, g1, cc.value) for n, a, b, g0, g1, cc in rows(table, top)}
    diffs, checked = [], 0
    for n, a, b, g0, g1, count in golden_rows():
        if n > top:
            continue
        checked += 1
        for column, want, have in zip(("N0", "N1", "count"), (g0, g1, count), got[(n, a, b)]):
            if want != have:
                diffs.append((n, a, b, column, want, have))
    out = [f"{'n':>2} {'(a,b)':>8} {'column':>6} {'expected':>22} {'computed':>22}"] if diffs else []
    for n, a, b, column, want, have in diffs:
        out.append(f"{n:>2} {f'({a},{b})':>8} {column:>6} "
                   f"{format_rational(want):>22} {format_rational(have):>22}")
    out.append(f"verified {checked} cells through degree {top}: {len(diffs)} differences")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_MISMATCH if diffs else EXIT_OK


def cmd_crosscheck(args) -> int:
    table = _solve(args)
    out, failures = [], 0
    for n in range(1, args.max_degree + 1):
        checks = cross_check(table, n, workers=args.workers)
        if not checks:
            out.append(f"degree {n}: no overlap cells")
            continue
        bad = [c for c in checks if c.difference != 0]
        failures += len(bad)
        out.append(f"degree {n}: {len(checks)} cells, {len(bad)} differences")
        for c in bad:
            _, a, b = c.cell
            out.append(f"  ({a},{b}) A={format_rational(c.relation_a)} "
                       f"B={format_rational(c.relation_b)} diff={format_rational(c.difference)}")
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_export(args) -> int:
    if not args.out:
        print("gwcp3 export: --out DIR is required", file=sys.stderr)
        return EXIT_USAGE
    table = _solve(args)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    table.save(outdir / "table.gwt")
    (outdir / "table.csv").write_text(table.to_csv())
    (outdir / "table.json").write_text(table.to_json())
    (outdir / "counts.csv").write_text(counts_csv(elliptic_counts(table, args.max_degree), table))
    return EXIT_OK


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify,
            "crosscheck": cmd_crosscheck, "export": cmd_export}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except MalformedFile as exc:
        print(f"gwcp3: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GWError as exc:
        print(f"gwcp3: solver inconsistency: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"gwcp3: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
