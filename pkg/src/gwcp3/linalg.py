"""Gaussian elimination over the rationals.

Systems here are small (at most a few dozen unknowns) but heavily
overdetermined, so the solver reduces to row echelon form, reports the rank,
and then substitutes the solution back into *every* input equation.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Row = Tuple[List[Fraction], Fraction]


def row_echelon(rows: Sequence[Row], ncols: int):
    """Reduced row echelon form of the augmented matrix ``[A | rhs]``.

    Returns ``(reduced_rows, pivot_columns)``.  Rows that reduce to
    ``0 = c`` with ``c != 0`` are kept (after the pivot rows) so the caller
    can detect inconsistency.
    """
    mat = [list(coeffs) + [rhs] for coeffs, rhs in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / Fraction(mat[r][c])
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: Sequence[Row], ncols: int) -> int:
    """Rank of the coefficient part only (the right-hand sides are ignored)."""
    _, pivots = row_echelon([(coeffs, Fraction(0)) for coeffs, _ in rows], ncols)
    return len(pivots)


def solve(rows: Sequence[Row], ncols: int):
    """Unique solution of ``A x = rhs`` or a :class:`ValueError` subclass.

    Raises ``RankDeficient`` when the solution is not unique and
    ``Inconsistent`` when no solution exists.
    """
    mat, pivots = row_echelon(rows, ncols)
    for row in mat[len(pivots):]:
        if row[-1] != 0:
            raise Inconsistent(row[-1])
    if len(pivots) < ncols:
        free = sorted(set(range(ncols)) - set(pivots))
        raise RankDeficient(free)
    return [mat[i][-1] for i in range(ncols)]


class RankDeficient(ValueError):
    def __init__(self, free_columns):
        super().__init__(f"free columns {free_columns}")
        self.free_columns = free_columns


class Inconsistent(ValueError):
    def __init__(self, residual):
        super().__init__(f"inconsistent equation 0 = {residual}")
        self.residual = residual
