"""Rendering of the combined (N0, N1, count) table."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import List

from .curves import CurveCount, elliptic_count
from .exact import format_rational
from .table import GWTable, cells_for_degree

COLUMNS = ["degree", "a", "b", "N0", "N1", "count", "status"]


def rows(table: GWTable, max_degree: int, min_degree: int = 1):
    """``(n, a, b, N0, N1, CurveCount)`` per cell, degree blocks by ascending ``a``."""
    for n in range(min_degree, max_degree + 1):
        for a, b in reversed(cells_for_degree(1, n)):
            yield (n, a, b, table.get(0, n, a, b), table.get(1, n, a, b),
                   elliptic_count(table, n, a, b))


def mixed(x: Fraction) -> str:
    """``-147/4`` as ``-36 3/4``; proper fractions and integers unchanged."""
    x = Fraction(x)
    if x.denominator == 1 or abs(x) < 1:
        return format_rational(x)
    whole, rest = divmod(abs(x.numerator), x.denominator)
    sign = "-" if x < 0 else ""
    return f"{sign}{whole} {rest}/{x.denominator}"


def to_csv(table: GWTable, max_degree: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for n, a, b, g0, g1, cc in rows(table, max_degree):
        w.writerow([n, a, b, format_rational(g0), format_rational(g1),
                    format_rational(cc.value), cc.status.value])
    return buf.getvalue()


def to_json(table: GWTable, max_degree: int) -> str:
    out = [
        {"n": n, "a": a, "b": b, "N0": format_rational(g0), "N1": format_rational(g1),
         "count": format_rational(cc.value), "status": cc.status.value}
        for n, a, b, g0, g1, cc in rows(table, max_degree)
    ]
    return json.dumps(out, indent=1) + "\n"


def to_markdown(table: GWTable, max_degree: int) -> str:
    lines = ["| n | (a,b) | N0 | N1 | N1 + (2n-1) N0/12 |",
             "|--:|:-----:|---:|---:|---:|"]
    for n, a, b, g0, g1, cc in rows(table, max_degree):
        first = cc.b == 2 * n  # each degree block opens at a = 0
        lines.append(f"| {n if first else ''} | ({a},{b}) | {format_rational(g0)} "
                     f"| {mixed(g1)} | {mixed(cc.value)} |")
    return "\n".join(lines) + "\n"


FORMATS = {"csv": to_csv, "json": to_json, "md": to_markdown}


def counts_csv(counts: List[CurveCount], table: GWTable) -> str:
    """Curve counts in the table export schema plus ``count,status``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["genus", "degree", "a", "b", "value", "count", "status"])
    for c in counts:
        w.writerow([1, c.degree, c.a, c.b, format_rational(table.get(1, c.degree, c.a, c.b)),
                    format_rational(c.value), c.status.value])
    return buf.getvalue()
