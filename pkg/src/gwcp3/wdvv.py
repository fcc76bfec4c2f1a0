"""Genus-0 invariants of CP^3 from the WDVV equations.

The genus-0 potential restricted to the (t2, t3) slice is

    F0 = t0^2 t3 / 2 + t0 t1 t2 + t1^3 / 6
         + sum_n sum_{4n = a + 2b} N_ab q^n e^{n t1} t2^a t3^b / (a! b!)

and the third derivatives F_ijk (i, j, k in 0..3, index i standing for the
class omega^i) satisfy

    sum_e F_ije F_(3-e)kl = sum_e F_ike F_(3-e)jl

since the Poincare pairing of CP^3 pairs omega^e with omega^(3-e).  Taking
the coefficient of q^n t2^a t3^b / (a! b!) of both sides gives equations that
are linear in the degree-n invariants, with constant terms built from lower
degrees.  Degree 1 is pinned by the number of lines through two points.
"""

from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import linalg
from .errors import InvalidArgument, SolverError
from .exact import ZERO, binom
from .table import GWKey, GWTable, Provenance, cells_for_degree, is_valid_cell

log = logging.getLogger(__name__)

Cell = Tuple[int, int]
SEED_CELL = (0, 2)
SEED_VALUE = Fraction(1)

INDICES = range(4)


def pairing(i: int, j: int) -> int:
    """Poincare pairing on H^*(CP^3) in the basis 1, omega, omega^2, omega^3."""
    return 1 if i + j == 3 else 0


def _check_index(*indices):
    for i in indices:
        if i not in INDICES:
            raise InvalidArgument(f"cohomology index must be in 0..3, got {i}")


def classical_triple(i: int, j: int, k: int) -> int:
    """Third derivative of the classical cubic: the triple intersection number."""
    _check_index(i, j, k)
    return 1 if i + j + k == 3 else 0


def quantum_third_derivative(i: int, j: int, k: int, n: int, a: int, b: int) -> Dict[Cell, int]:
    """Coefficient of q^n t2^a t3^b / (a! b!) in the quantum part of F_ijk.

    Returned as a linear form ``{cell: multiplier}`` in the degree-``n``
    invariants: each t1-derivative contributes a factor ``n``, each
    t2-derivative raises ``a``, each t3-derivative raises ``b``, and any
    t0-derivative kills the quantum part.  An empty dict means zero.
    """
    _check_index(i, j, k)
    idx = (i, j, k)
    if 0 in idx or n < 1 or a < 0 or b < 0:
        return {}
    cell = (a + idx.count(2), b + idx.count(3))
    if not is_valid_cell(n, *cell):
        return {}
    return {cell: n ** idx.count(1)}


@dataclass
class Equation:
    """``sum(coeffs[cell] * N0[n; cell]) + const == 0``."""

    label: Tuple[int, ...]
    coeffs: Dict[Cell, Fraction] = field(default_factory=dict)
    const: Fraction = ZERO

    def is_trivial(self) -> bool:
        return self.const == 0 and all(c == 0 for c in self.coeffs.values())

    def normalized(self, unknowns: List[Cell]):
        """Hashable row scaled so its first nonzero entry is 1."""
        row = [self.coeffs.get(c, ZERO) for c in unknowns] + [self.const]
        lead = next(x for x in row if x != 0)
        return tuple(x / lead for x in row)

    def evaluate(self, values: Dict[Cell, Fraction]) -> Fraction:
        return sum((c * values[cell] for cell, c in self.coeffs.items()), self.const)


class _KnownSeries:
    """Third-derivative series F_ijk over degrees 1..n-1, read from a table.

    ``series`` maps ``(m, a, b)`` to the coefficient of q^m t2^a t3^b/(a! b!);
    ``product`` is the degree-``n`` part of a product of two such series with
    both factors of degree >= 1.
    """

    def __init__(self, table: GWTable, max_degree: int):
        self.table = table
        self.max_degree = max_degree
        self._series = {}
        self._products = {}

    def series(self, i, j, k):
        key = tuple(sorted((i, j, k)))
        if key not in self._series:
            by_degree = {}
            if 0 not in key:
                da, db, ones = key.count(2), key.count(3), key.count(1)
                for m in range(1, self.max_degree + 1):
                    part = {}
                    for ca, cb in cells_for_degree(0, m):
                        a, b = ca - da, cb - db
                        if a < 0 or b < 0:
                            continue
                        v = _narrow(self.table.get(0, m, ca, cb))
                        if v:
                            part[(a, b)] = m ** ones * v
                    by_degree[m] = part
            self._series[key] = by_degree
        return self._series[key]

    def product(self, x_idx, y_idx, n) -> Dict[Cell, Fraction]:
        key = (tuple(sorted(x_idx)), tuple(sorted(y_idx)), n)
        if key not in self._products:
            x, y = self.series(*x_idx), self.series(*y_idx)
            out: Dict[Cell, Fraction] = {}
            for m1 in range(1, n):
                for (a1, b1), v1 in x.get(m1, {}).items():
                    for (a2, b2), v2 in y.get(n - m1, {}).items():
                        a, b = a1 + a2, b1 + b2
                        out[(a, b)] = out.get((a, b), 0) + binom(a, a1) * binom(b, b1) * v1 * v2
            self._products[key] = out
        return self._products[key]


def _narrow(v: Fraction):
    # integral values as int: same exact result, far cheaper arithmetic
    return v.numerator if v.denominator == 1 else v


def _side(known: _KnownSeries, p, q, r, s, n, a, b, eq_coeffs, sign):
    """Add sign * sum_e F_{p q e} F_{(3-e) r s} at (n, a, b); return the constant part."""
    const = 0
    for e in INDICES:
        f = 3 - e
        # classical x quantum: degree-n unknowns enter linearly
        if p + q + e == 3:
            for cell, m in quantum_third_derivative(f, r, s, n, a, b).items():
                eq_coeffs[cell] = eq_coeffs.get(cell, 0) + sign * m
        if f + r + s == 3:
            for cell, m in quantum_third_derivative(p, q, e, n, a, b).items():
                eq_coeffs[cell] = eq_coeffs.get(cell, 0) + sign * m
        # quantum x quantum, split n = n1 + n2 with n1, n2 >= 1
        const += sign * known.product((p, q, e), (f, r, s), n).get((a, b), 0)
    return const


def _targets(n: int):
    for a in range(4 * n + 1):
        for b in range((4 * n - a) // 2 + 1):
            yield a, b


def _equations_for_tuple(known: _KnownSeries, n, ijkl) -> List[Equation]:
    i, j, k, l = ijkl
    out = []
    for a, b in _targets(n):
        eq = Equation(label=(i, j, k, l, a, b))
        const = _side(known, i, j, k, l, n, a, b, eq.coeffs, +1)
        const += _side(known, i, k, j, l, n, a, b, eq.coeffs, -1)
        eq.const = Fraction(const)
        eq.coeffs = {c: Fraction(v) for c, v in eq.coeffs.items() if v}
        if not eq.is_trivial():
            out.append(eq)
    return out


def wdvv_equations_for_degree(table: GWTable, n: int, workers: int = 1) -> List[Equation]:
    """All nontrivial coefficient equations of WDVV at q-degree ``n``.

    The constant terms read genus-0 invariants of degrees ``1..n-1`` from
    ``table``.  Every one of the 256 index tuples is enumerated; duplicates
    are left in place (the solver deduplicates).
    """
    if n < 1:
        raise InvalidArgument(f"degree must be >= 1, got {n}")
    known = _KnownSeries(table, n - 1)
    tuples = list(itertools.product(INDICES, repeat=4))
    # warm the caches single-threaded so worker threads only read them
    triples = list(itertools.product(INDICES, repeat=3))
    for t1 in triples:
        for t2 in triples:
            known.product(t1, t2, n)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda t: _equations_for_tuple(known, n, t), tuples))
    else:
        chunks = [_equations_for_tuple(known, n, t) for t in tuples]
    return [eq for chunk in chunks for eq in chunk]


def _unique_rows(equations: List[Equation], unknowns: List[Cell]):
    seen = {}
    for eq in equations:
        if all(eq.coeffs.get(c, ZERO) == 0 for c in unknowns):
            continue
        seen.setdefault(eq.normalized(unknowns), eq)
    return list(seen.values())


def wdvv_rank(table: GWTable, n: int) -> int:
    """Rank of the degree-``n`` system in its ``2n + 1`` unknowns (no seed)."""
    unknowns = cells_for_degree(0, n)
    eqs = _unique_rows(wdvv_equations_for_degree(table, n), unknowns)
    rows = [([eq.coeffs.get(c, ZERO) for c in unknowns], -eq.const) for eq in eqs]
    return linalg.rank(rows, len(unknowns))


def solve_degree(table: GWTable, n: int, workers: int = 1) -> Dict[Cell, Fraction]:
    """Solve the degree-``n`` system and store the results in ``table``."""
    unknowns = cells_for_degree(0, n)
    equations = wdvv_equations_for_degree(table, n, workers)
    rows = [([eq.coeffs.get(c, ZERO) for c in unknowns], -eq.const)
            for eq in _unique_rows(equations, unknowns)]
    if n == 1:
        rows.append(([Fraction(c == SEED_CELL) for c in unknowns], SEED_VALUE))
    try:
        solution = linalg.solve(rows, len(unknowns))
    except linalg.RankDeficient as exc:
        free = [unknowns[c] for c in exc.free_columns]
        raise SolverError(n, f"rank deficient, undetermined cells {free}") from None
    except linalg.Inconsistent as exc:
        raise SolverError(n, "inconsistent system", residual=exc.residual) from None
    values = dict(zip(unknowns, solution))
    # every equation, including those that never reached a pivot
    for eq in equations:
        r = eq.evaluate(values)
        if r != 0:
            raise SolverError(n, f"equation {eq.label} has residual {r}", residual=r)
    for cell, v in values.items():
        prov = Provenance.SEED if (n == 1 and cell == SEED_CELL) else Provenance.WDVV_SOLVED
        table.put(GWKey(0, n, *cell), v, prov)
    log.info("genus 0, degree %d: solved %d cells from %d equations",
             n, len(unknowns), len(equations))
    return values


def solve_genus0(max_degree: int, table: Optional[GWTable] = None, workers: int = 1) -> GWTable:
    """Fill genus-0 entries of degrees ``1..max_degree`` (skipping complete ones)."""
    if max_degree < 1:
        raise InvalidArgument(f"max_degree must be >= 1, got {max_degree}")
    table = GWTable() if table is None else table
    for n in range(1, max_degree + 1):
        if not table.has_degree(0, n):
            solve_degree(table, n, workers)
    return table


def wdvv_residual(table: GWTable, n: int) -> Fraction:
    """Largest absolute residual of the degree-``n`` equations on stored values."""
    values = {cell: table.get(0, n, *cell) for cell in cells_for_degree(0, n)}
    return max((abs(eq.evaluate(values)) for eq in wdvv_equations_for_degree(table, n)),
               default=ZERO)
