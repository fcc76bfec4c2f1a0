"""Enumerative counts of elliptic space curves.

The number of elliptic curves of degree ``n`` in CP^3 through ``a`` generic
lines and ``b`` generic points is ``N1[a, b] + (2n - 1) N0[a, b] / 12``.
Anomalies (a fractional or negative count) are reported as statuses rather
than raised, so a whole table can be audited in one pass.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .table import GWKey, GWTable, cells_for_degree, golden_counts


class Status(enum.Enum):
    OK = "OK"
    NON_INTEGRAL = "NON_INTEGRAL"
    NEGATIVE = "NEGATIVE"


@dataclass(frozen=True)
class CurveCount:
    degree: int
    a: int
    b: int
    value: Fraction
    status: Status

    @property
    def count(self) -> Optional[int]:
        """The integer count, or ``None`` when the value is not integral."""
        if self.value.denominator != 1:
            return None
        return self.value.numerator

    @property
    def ok(self) -> bool:
        return self.status is Status.OK


def elliptic_value(n: int, genus0, genus1) -> Fraction:
    return Fraction(genus1) + Fraction(2 * n - 1, 12) * Fraction(genus0)


def elliptic_count(table: GWTable, n: int, a: int, b: int) -> CurveCount:
    GWKey(1, n, a, b)  # validates the cell
    value = elliptic_value(n, table.get(0, n, a, b), table.get(1, n, a, b))
    if value.denominator != 1:
        status = Status.NON_INTEGRAL
    elif value < 0:
        status = Status.NEGATIVE
    else:
        status = Status.OK
    return CurveCount(n, a, b, value, status)


def elliptic_counts(table: GWTable, max_degree: int) -> List[CurveCount]:
    return [elliptic_count(table, n, a, b)
            for n in range(1, max_degree + 1)
            for a, b in cells_for_degree(1, n)]


def genus0_integrality_report(table: GWTable, max_degree: int) -> List[Tuple[GWKey, Fraction]]:
    """Genus-0 cells through ``max_degree`` that are not non-negative integers."""
    bad = []
    for n in range(1, max_degree + 1):
        for a, b in cells_for_degree(0, n):
            v = table.get(0, n, a, b)
            if v.denominator != 1 or v < 0:
                bad.append((GWKey(0, n, a, b), v))
    return bad


@dataclass(frozen=True)
class SanityRow:
    cell: Tuple[int, int, int]
    count: CurveCount
    expected: int

    @property
    def ok(self) -> bool:
        return self.count.ok and self.count.value == self.expected


def low_degree_sanity(table: GWTable, max_degree: int = 3) -> List[SanityRow]:
    """Degree 1 and 2 counts must vanish; degree 3 must match the published counts.

    There are no elliptic space curves of degree 1 or 2, and the plane cubics
    account for every count in degree 3.
    """
    if not 1 <= max_degree <= 3:
        raise ValueError(f"low-degree check covers degrees 1..3, got {max_degree}")
    published = golden_counts()
    rows = []
    for n in range(1, max_degree + 1):
        for a, b in cells_for_degree(1, n):
            expected = 0 if n < 3 else published[(n, a, b)]
            rows.append(SanityRow((n, a, b), elliptic_count(table, n, a, b), expected))
    return rows
