"""Exact rational and elliptic Gromov-Witten invariants of CP^3."""

from .curves import CurveCount, Status, elliptic_count, genus0_integrality_report, low_degree_sanity
from .errors import (ConsistencyViolation, GWError, InvalidArgument, InvalidCell,
                     MalformedFile, MissingEntry, SolverError)
from .exact import Rational, binom, multinom
from .genus1 import (cross_check, f1_linear_coefficient, relation_a, relation_b,
                     relationA_solve, relationB_solve, solve_genus1)
from .table import GWKey, GWTable, Provenance, cells_for_degree, load_golden_table1
from .wdvv import solve_genus0, wdvv_residual

__version__ = "0.1.0"


def compute_table(max_degree: int, table: GWTable = None, workers: int = 1) -> GWTable:
    """Genus 0 by WDVV, then genus 1 by the recursions, through ``max_degree``."""
    table = solve_genus0(max_degree, table, workers=workers)
    return solve_genus1(max_degree, table)
