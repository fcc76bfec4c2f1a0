"""Elliptic Gromov-Witten invariants of CP^3 from the genus-1 recursions.

Two relations among the genus-1 coefficients N1 and the genus-0 coefficients
N0 are evaluated here.  Relation A holds for ``a >= 2`` and expresses
``3 N1[a, b]`` through ``N1[a-2, b+1]`` of the same degree plus products with
lower-degree data; relation B holds for ``b >= 2`` and gives ``N1[a, b]``
purely from lower-degree genus-1 data.  Within degree ``n`` the solver takes
``N1[0, 2n]`` from B and then walks ``a = 2, 4, ..., 4n`` with A.

In every convolution the index split ``a = a1 + a2 (+ a3)``,
``b = b1 + b2 (+ b3)`` also splits the degree, ``n = n1 + n2 (+ n3)``, with
each part at least 1 and each factor on its own dimension gate
``4 ni = ai + 2 bi``.  Each printed term family gets a stable label in the
returned :class:`TermLedger`.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .errors import InvalidCell
from .exact import ZERO, binom, format_rational, multinom
from .table import GWKey, GWTable, Provenance, cells_for_degree, is_valid_cell

log = logging.getLogger(__name__)

# second Chern class of CP^3: c(T) = (1 + omega)^4
C2_CP3 = 6


def f1_linear_coefficient() -> Fraction:
    """Coefficient of t1 in the genus-1 potential, ``-c2/24 = -1/4``."""
    return Fraction(-C2_CP3, 24)


@dataclass
class TermLedger:
    """Per-term decomposition of one relation evaluation."""

    relation: str
    cell: Tuple[int, int, int]
    terms: List[Tuple[str, Fraction]] = field(default_factory=list)
    # the value the relation solves for, derived from the terms
    value: Fraction = ZERO

    def add(self, label: str, amount) -> None:
        self.terms.append((label, Fraction(amount)))

    @property
    def total(self) -> Fraction:
        return sum((v for _, v in self.terms), ZERO)

    def dump(self) -> str:
        n, a, b = self.cell
        lines = [f"[{self.relation} n={n} a={a} b={b}]"]
        lines += [f"{label} = {format_rational(v)}" for label, v in self.terms]
        lines.append(f"result = {format_rational(self.value)}")
        return "\n".join(lines) + "\n"


def _splits2(n: int, a: int, b: int) -> Iterator[Tuple[int, int, int, int, int, int]]:
    """``(n1, a1, b1, n2, a2, b2)`` with both parts dimensionally valid, ``ni >= 1``."""
    for n1 in range(1, n):
        n2 = n - n1
        for b1 in range(max(0, b - 2 * n2), min(b, 2 * n1) + 1):
            a1 = 4 * n1 - 2 * b1
            a2, b2 = a - a1, b - b1
            if a2 >= 0 and is_valid_cell(n2, a2, b2):
                yield n1, a1, b1, n2, a2, b2


def _splits3(n: int, a: int, b: int):
    for n1 in range(1, n - 1):
        for b1 in range(0, min(b, 2 * n1) + 1):
            a1 = 4 * n1 - 2 * b1
            if a1 > a:
                continue
            for n2, a2, b2, n3, a3, b3 in _splits2(n - n1, a - a1, b - b1):
                yield n1, a1, b1, n2, a2, b2, n3, a3, b3


def _check_cell(n, a, b):
    if not is_valid_cell(n, a, b):
        raise InvalidCell(f"(n={n}, a={a}, b={b}) violates 4n = a + 2b")


def relation_a(table: GWTable, n: int, a: int, b: int) -> TermLedger:
    """Evaluate relation A at ``(n, a, b)``; ``ledger.value`` is ``N1[a, b]``.

    The terms sum to ``3 N1[a, b]``.
    """
    _check_cell(n, a, b)
    if a < 2:
        raise InvalidCell(f"relation A needs a >= 2, got a={a}")
    N0 = lambda m, x, y: table.get(0, m, x, y)
    N1 = lambda m, x, y: table.get(1, m, x, y)
    led = TermLedger("A", (n, a, b))

    led.add("A.lin  4n N1[a-2,b+1]", 4 * n * N1(n, a - 2, b + 1))
    led.add("A.quad -n^2/4 N0[a,b]", Fraction(-n * n, 4) * N0(n, a, b))
    # sign-corrected: the factor is (3 - n), not (n - 3)
    led.add("A.cub  n^3(3-n)/6 N0[a-2,b+1]", Fraction(n ** 3 * (3 - n), 6) * N0(n, a - 2, b + 1))

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a - 2, b + 1):
        s += (N1(n1, a1, b1) * N0(n2, a2, b2) * n2 ** 2 * (n - 3 * n1) * binom(a - 2, a1)
              * (n1 * binom(b, b1) + n2 * binom(b, b1 - 1)))
    led.add("A.S1   -2 sum N1 N0 [a-2=a1+a2, b+1=b1+b2]", -2 * s)

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a, b):
        bracket = (n1 * n2 * (n + 3 * n1) * binom(a - 2, a1)
                   + n2 ** 2 * (3 * n1 - n) * binom(a - 2, a1 - 1)
                   - 6 * n2 ** 3 * binom(a - 2, a1 - 2))
        s += N1(n1, a1, b1) * N0(n2, a2, b2) * bracket * binom(b, b1)
    led.add("A.S2   sum N1 N0 [a=a1+a2, b=b1+b2]", s)

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a, b):
        bracket = (n1 ** 2 * (3 - n1) * binom(a - 2, a1)
                   + n1 * n2 * (n - 3 * n1 - 3) * binom(a - 2, a1 - 1)
                   + n2 ** 2 * (-n1 + n2 - 6) * binom(a - 2, a1 - 2))
        s += N0(n1, a1, b1) * N0(n2, a2, b2) * n1 * n2 ** 2 * bracket * binom(b, b1)
    # sign-corrected: enters with -1/12
    led.add("A.S3   -1/12 sum N0 N0 [a=a1+a2, b=b1+b2]", -s / 12)

    s = ZERO
    m = a - 2
    for n1, a1, b1, n2, a2, b2, n3, a3, b3 in _splits3(n, a, b):
        bracket = (2 * n1 * n2 ** 3 * n3 * (n + 3 * n1 - 3 * n2) * multinom(m, a2, a3 - 2)
                   - 6 * n2 ** 3 * n3 ** 3 * multinom(m, a2, a3)
                   + n2 ** 2 * n3 ** 2 * (3 * n1 - n)
                   * (n1 * multinom(m, a2 - 1, a3 - 1)
                      + n2 * multinom(m, a2, a3 - 1)
                      + n3 * multinom(m, a2 - 1, a3)))
        s += (N1(n1, a1, b1) * N0(n2, a2, b2) * N0(n3, a3, b3)
              * bracket * multinom(b, b2, b3))
    led.add("A.S4   1/2 sum N1 N0 N0 [a=a1+a2+a3, b=b1+b2+b3]", s / 2)

    led.value = led.total / 3
    return led


def relation_b(table: GWTable, n: int, a: int, b: int) -> TermLedger:
    """Evaluate relation B at ``(n, a, b)``; ``ledger.value`` is ``N1[a, b]``.

    The ledger lists every term except ``N1[a, b]`` itself, so the value is
    minus the ledger total.
    """
    _check_cell(n, a, b)
    if b < 2:
        raise InvalidCell(f"relation B needs b >= 2, got b={b}")
    N0 = lambda m, x, y: table.get(0, m, x, y)
    N1 = lambda m, x, y: table.get(1, m, x, y)
    led = TermLedger("B", (n, a, b))

    led.add("B.lin  n(2n-1)/24 N0[a+2,b-1]", Fraction(n * (2 * n - 1), 24) * N0(n, a + 2, b - 1))
    led.add("B.quad 1/48 N0[a+4,b-2]", Fraction(1, 48) * N0(n, a + 4, b - 2))

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a + 2, b - 1):
        first = n2 * (n * binom(a, a1) + n2 * binom(a, a1 - 1)) * binom(b - 2, b1 - 1)
        second = (n1 * (6 * n1 - n2) * binom(a, a1)
                  + n2 * (16 * n1 - n2) * binom(a, a1 - 1)
                  + 6 * n2 ** 2 * binom(a, a1 - 2)) * binom(b - 2, b1)
        s += N1(n1, a1, b1) * N0(n2, a2, b2) * (first - Fraction(second, 6))
    led.add("B.S1   sum N1 N0 [a+2=a1+a2, b-1=b1+b2]", s)

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a + 4, b - 2):
        bracket = (n1 * binom(a, a1) + (2 * n1 - 5 * n2) * binom(a, a1 - 1)
                   + 6 * n2 * binom(a, a1 - 2))
        s += N1(n1, a1, b1) * N0(n2, a2, b2) * bracket * binom(b - 2, b1)
    led.add("B.S2   -1/12 sum N1 N0 [a+4=a1+a2, b-2=b1+b2]", -s / 12)

    s = ZERO
    for n1, a1, b1, n2, a2, b2 in _splits2(n, a + 4, b - 2):
        bracket = (n1 ** 3 * (n1 - 1) * binom(a, a1)
                   + n1 ** 2 * n2 * (2 * n1 - 2 * n2 + 1) * binom(a, a1 - 1)
                   + n1 * n2 ** 2 * (2 * n1 - 2 * n2 + 7) * binom(a, a1 - 2)
                   + n2 ** 3 * (2 * n1 + 5) * binom(a, a1 - 3)
                   + n2 ** 4 * binom(a, a1 - 4))
        s += N0(n1, a1, b1) * N0(n2, a2, b2) * bracket * binom(b - 2, b1)
    led.add("B.S3   -1/48 sum N0 N0 [a+4=a1+a2, b-2=b1+b2]", -s / 48)

    s = ZERO
    for n1, a1, b1, n2, a2, b2, n3, a3, b3 in _splits3(n, a + 4, b - 2):
        bracket = (3 * n2 * n3 * (n2 ** 2 * multinom(a, a2, a3 - 2)
                                  + n3 ** 2 * multinom(a, a2 - 2, a3))
                   + n1 * (n2 ** 3 * multinom(a, a2, a3 - 4)
                           + n2 ** 2 * (6 * n1 - n3) * multinom(a, a2 - 1, a3 - 3)
                           - 7 * n2 * n3 ** 2 * multinom(a, a2 - 2, a3 - 2)
                           - 5 * n3 ** 3 * multinom(a, a2 - 3, a3 - 1))
                   + (n2 ** 3 * (n1 - 5 * n3) * multinom(a, a2, a3 - 3)
                      + n2 ** 2 * n3 * (5 * n1 - 7 * n3) * multinom(a, a2 - 1, a3 - 2)
                      + n2 * n3 ** 2 * (5 * n1 - n3) * multinom(a, a2 - 2, a3 - 1)
                      + n3 ** 3 * (n1 + n3) * multinom(a, a2 - 3, a3)))
        s += (N1(n1, a1, b1) * N0(n2, a2, b2) * N0(n3, a3, b3)
              * bracket * multinom(b - 2, b2, b3))
    led.add("B.S4   -1/12 sum N1 N0 N0 [a+4=a1+a2+a3, b-2=b1+b2+b3]", -s / 12)

    led.value = -led.total
    return led


def relationA_solve(table: GWTable, n: int, a: int, b: int) -> Fraction:
    return relation_a(table, n, a, b).value


def relationB_solve(table: GWTable, n: int, a: int, b: int) -> Fraction:
    return relation_b(table, n, a, b).value


def solve_degree(table: GWTable, n: int) -> None:
    """Fill all genus-1 cells of degree ``n`` (genus 0 and lower degrees must be present)."""
    table.put(GWKey(1, n, 0, 2 * n), relationB_solve(table, n, 0, 2 * n), Provenance.RELATION_B)
    for a in range(2, 4 * n + 1, 2):
        b = 2 * n - a // 2
        table.put(GWKey(1, n, a, b), relationA_solve(table, n, a, b), Provenance.RELATION_A)


def solve_genus1(max_degree: int, table: GWTable) -> GWTable:
    for n in range(1, max_degree + 1):
        if not table.has_degree(1, n):
            solve_degree(table, n)
            log.info("genus 1, degree %d: solved %d cells", n, 2 * n + 1)
    return table


@dataclass(frozen=True)
class CrossCheck:
    cell: Tuple[int, int, int]
    relation_a: Fraction
    relation_b: Fraction

    @property
    def difference(self) -> Fraction:
        return self.relation_a - self.relation_b


def overlap_cells(n: int) -> List[Tuple[int, int]]:
    """Cells of degree ``n`` where both relations apply (``a >= 2`` and ``b >= 2``)."""
    return [(a, b) for a, b in cells_for_degree(1, n) if a >= 2 and b >= 2]


def cross_check(table: GWTable, n: int, workers: int = 1) -> List[CrossCheck]:
    """Evaluate both relations independently on every overlap cell of degree ``n``."""
    def one(cell):
        a, b = cell
        return CrossCheck((n, a, b), relationA_solve(table, n, a, b),
                          relationB_solve(table, n, a, b))

    cells = overlap_cells(n)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, cells))
    return [one(c) for c in cells]
