import itertools
from fractions import Fraction

import pytest
import sympy as sp

from gwcp3 import compute_table
from gwcp3.errors import InvalidArgument
from gwcp3.table import GWKey, cells_for_degree, load_golden_table1
from gwcp3.wdvv import (classical_triple, quantum_third_derivative, solve_genus0,
                        wdvv_equations_for_degree, wdvv_rank, wdvv_residual)


def test_classical_triple():
    assert classical_triple(0, 1, 2) == 1
    assert classical_triple(1, 1, 1) == 1
    assert classical_triple(0, 0, 3) == 1
    assert classical_triple(1, 1, 2) == 0
    with pytest.raises(InvalidArgument):
        classical_triple(0, 0, 4)


def test_quantum_third_derivative():
    assert quantum_third_derivative(1, 1, 1, 2, 8, 0) == {(8, 0): 8}
    assert quantum_third_derivative(2, 2, 3, 1, 0, 0) == {(2, 1): 1}
    assert quantum_third_derivative(3, 3, 1, 1, 0, 0) == {(0, 2): 1}
    assert quantum_third_derivative(0, 2, 3, 1, 1, 1) == {}
    # off the dimension gate
    assert quantum_third_derivative(2, 2, 2, 1, 0, 0) == {}


# --- independent oracle: differentiate the potential symbolically -----------

T = sp.symbols("t0:4")
Q = sp.Symbol("q")


def _potential(values, top):
    """F0 through q^top; ``values[(n, a, b)]`` may be a number or a symbol."""
    t0, t1, t2, t3 = T
    f = t0 ** 2 * t3 / 2 + t0 * t1 * t2 + t1 ** 3 / 6
    for (n, a, b), v in values.items():
        if n <= top:
            f += v * Q ** n * sp.exp(n * t1) * t2 ** a * t3 ** b / (sp.factorial(a) * sp.factorial(b))
    return f


def _oracle_equations(values, n):
    f = _potential(values, n)
    d3 = {idx: sp.diff(f, *(T[i] for i in idx))
          for idx in itertools.combinations_with_replacement(range(4), 3)}
    F = lambda *idx: d3[tuple(sorted(idx))]
    eqs = set()
    for i, j, k, l in itertools.product(range(4), repeat=4):
        expr = sum(F(i, j, e) * F(3 - e, k, l) - F(i, k, e) * F(3 - e, j, l) for e in range(4))
        coeff = sp.expand(expr).coeff(Q, n).subs({T[0]: 0, T[1]: 0})
        poly = sp.Poly(coeff, T[2], T[3]) if coeff != 0 else None
        if poly is not None:
            eqs.update(c for c in poly.coeffs() if c != 0)
    return eqs


def test_degree1_rank_and_kernel():
    syms = {cell: sp.Symbol(f"N{cell[0]}_{cell[1]}") for cell in cells_for_degree(0, 1)}
    eqs = _oracle_equations({(1, *c): s for c, s in syms.items()}, 1)
    unknowns = list(syms.values())
    M = sp.Matrix([[sp.diff(e, u) for u in unknowns] for e in eqs])
    assert M.rank() == 2
    assert len(M.nullspace()) == 1
    # the oracle's kernel, scaled by N02 = 1, is the solver's answer
    kernel = M.nullspace()[0] / M.nullspace()[0][2]
    solved = compute_table(1)
    assert [solved.get(0, 1, *c) for c in syms] == [Fraction(int(x)) for x in kernel]
    assert wdvv_rank(solved, 1) == 2


def test_degree2_oracle():
    deg1 = {(1, 4, 0): 2, (1, 2, 1): 1, (1, 0, 2): 1}
    syms = {cell: sp.Symbol(f"M{cell[0]}_{cell[1]}") for cell in cells_for_degree(0, 2)}
    eqs = _oracle_equations({**deg1, **{(2, *c): s for c, s in syms.items()}}, 2)
    (sol,) = sp.solve(list(eqs), list(syms.values()), dict=True)
    assert sol[syms[(8, 0)]] == 92
    solved = compute_table(2)
    for cell, s in syms.items():
        assert solved.get(0, 2, *cell) == Fraction(int(sol[s]))
    assert wdvv_rank(solved, 2) == 5


def test_middle_swap_tuples_trivial():
    # (i, j, j, l): both sides of the equation coincide term by term
    eqs = wdvv_equations_for_degree(load_golden_table1(2), 2)
    labels = {eq.label[:4] for eq in eqs}
    assert labels
    for i, j, l in itertools.product(range(4), repeat=3):
        assert (i, j, j, l) not in labels


def test_solved_values(table6):
    assert table6.get(0, 1, 4, 0) == 2
    assert table6.get(0, 3, 12, 0) == 80160
    assert table6.get(0, 4, 16, 0) == 383306880
    assert table6.get(0, 1, 0, 2) == 1
    assert table6.get(0, 2, 0, 4) == 0
    assert table6.get(0, 6, 24, 0) == 244274488980962304


def test_matches_golden_genus0(table6):
    golden = load_golden_table1()
    for key, value, _ in golden.items():
        if key.genus == 0:
            assert table6.get(key.genus, key.degree, key.a, key.b) == value, key


@pytest.mark.parametrize("n", range(1, 7))
def test_residual_zero(table6, n):
    assert wdvv_residual(table6, n) == 0


def test_residual_detects_perturbation():
    t = load_golden_table1(2)
    t.replace(GWKey(0, 1, 2, 1), t.get(0, 1, 2, 1) + 1)
    assert wdvv_residual(t, 1) != 0
    assert wdvv_residual(t, 2) != 0


def test_workers_deterministic():
    a = solve_genus0(4, workers=1)
    b = solve_genus0(4, workers=8)
    assert a == b
    assert a.dumps() == b.dumps()


def test_nonnegative_integers(table6):
    for n in range(1, 7):
        for cell in cells_for_degree(0, n):
            v = table6.get(0, n, *cell)
            assert v.denominator == 1 and v >= 0


def test_rejects_bad_degree():
    with pytest.raises(InvalidArgument):
        solve_genus0(0)
