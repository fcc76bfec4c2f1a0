"""Exact arithmetic helpers.

Every invariant is a :class:`fractions.Fraction`; the stdlib type is already
kept in lowest terms with a positive denominator, so it serves directly as
the rational number type here.  This module adds the combinatorial
coefficients used by the recursions, with the convention that any
out-of-range binomial or multinomial is zero, plus the ``num/den`` text
encoding shared by every file format.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Rational = Fraction

__all__ = [
    "Rational",
    "ZERO",
    "ONE",
    "factorial",
    "binom",
    "multinom",
    "format_rational",
    "parse_rational",
]

ZERO = Fraction(0)
ONE = Fraction(1)


@lru_cache(maxsize=None)
def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial of negative number {m}")
    # iterative so the cache fills bottom-up without deep recursion
    result = 1
    for i in range(2, m + 1):
        result *= i
    return result


def binom(m: int, k: int) -> int:
    """Binomial coefficient, zero unless ``0 <= k <= m``.

    >>> binom(4, 2), binom(1, -1), binom(0, 0), binom(-1, 0)
    (6, 0, 1, 0)
    """
    if k < 0 or m < 0 or k > m:
        return 0
    return factorial(m) // (factorial(k) * factorial(m - k))


def multinom(m: int, k1: int, k2: int) -> int:
    """Trinomial coefficient ``m! / (k1! k2! (m-k1-k2)!)``.

    Zero whenever an index is negative or ``k1 + k2 > m``; this is what makes
    symbols like ``C(a-2; a2, a3-2)`` vanish for small ``a3`` without any
    special casing at the call site.
    """
    rest = m - k1 - k2
    if m < 0 or k1 < 0 or k2 < 0 or rest < 0:
        return 0
    return factorial(m) // (factorial(k1) * factorial(k2) * factorial(rest))


def format_rational(x: Fraction) -> str:
    """Render as ``num/den``, or as a bare integer when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts ``n/1`` and bare ``n``.

    Anything that is not an integer or a ratio of integers (floats, exponents,
    zero denominators) raises :class:`ValueError`.
    """
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(n, d)
