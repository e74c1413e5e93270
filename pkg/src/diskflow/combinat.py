"""Exact closed-form counting for the diagram census.

Everything here is integer or rational arithmetic, no floating point:

    C_m                 Catalan numbers, C_m = (2m)!/((m+1)! m!)
    alpha(n)            diagrams with one marked node forced to be a source,
                        alpha(n) = 3^(n/2-1) * C_(n/2-1)        (OEIS A005159)
    t_count(n)          all diagrams on n nodes,
                        t_count(n) = 3^(n/2-2) * (C_(n/2) + 2 C_(n/2-1))
    a275607(n)          OEIS A275607 closed form; a275607(n) == t_count(2n+2)
    series_coeffs(K)    coefficients of the generating function
                        (1+6x)(1-sqrt(1-12x))/(54x) = 1/9 + x + 4x^2 + 27x^3 + ...

Catalan values are memoized in an append-only table, so repeated callers
(census, orbit counting) pay O(1) per lookup; under CPython's GIL the
append-only growth is safe for concurrent readers.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

_catalan: list[int] = [1]


def catalan(m: int) -> int:
    """m-th Catalan number via the exact product recurrence C_m = C_(m-1)*2(2m-1)/(m+1)."""
    if m < 0:
        raise ValueError(f"catalan index must be >= 0, got {m}")
    while len(_catalan) <= m:
        k = len(_catalan)
        _catalan.append(_catalan[-1] * 2 * (2 * k - 1) // (k + 1))
    return _catalan[m]


def _require_even(n: int, least: int) -> None:
    if n % 2 or n < least:
        raise ValueError(f"node count must be even and >= {least}, got {n}")


def alpha(n: int) -> int:
    """Number of n-node diagrams with a prescribed source node: 3^(n/2-1) * C_(n/2-1)."""
    _require_even(n, 2)
    half = n // 2
    return 3 ** (half - 1) * catalan(half - 1)


def t_count(n: int) -> int:
    """Number of n-node diagrams: 3^(n/2-2) * (C_(n/2) + 2*C_(n/2-1)).

    For n = 2 the power 3^(-1) is evaluated exactly over the rationals
    ((1 + 2)/3 = 1), keeping a single formula with no special-case table.
    """
    _require_even(n, 2)
    half = n // 2
    core = catalan(half) + 2 * catalan(half - 1)
    if half >= 2:
        return 3 ** (half - 2) * core
    val = Fraction(core, 3)
    if val.denominator != 1:
        raise ArithmeticError(f"t_count({n}) is not integral: {val}")
    return int(val)


def catalan_triple_sum(n: int) -> int:
    """Sum of C_i*C_j*C_k over i+j+k = n-1 (i,j,k >= 0); equals C_(n+1) - C_n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    total = 0
    for i in range(n):
        for j in range(n - i):
            total += catalan(i) * catalan(j) * catalan(n - 1 - i - j)
    return total


def alpha_recurrence_check(n: int) -> bool:
    """True iff alpha(n) == 3 * sum of alpha(k)*alpha(n-k) over even k in 2..n-2."""
    _require_even(n, 4)
    rhs = 3 * sum(alpha(k) * alpha(n - k) for k in range(2, n - 1, 2))
    return alpha(n) == rhs


def t_recurrence_check(n: int) -> bool:
    """True iff t_count(n) == alpha(n) + sum of alpha(k)*alpha(l)*alpha(m)
    over even k,l,m >= 2 with k+l+m = n+2."""
    _require_even(n, 4)
    rhs = alpha(n)
    for k in range(2, n + 1, 2):
        for l in range(2, n + 2 - k - 1, 2):
            m = n + 2 - k - l
            if m >= 2:
                rhs += alpha(k) * alpha(l) * alpha(m)
    return t_count(n) == rhs


def a275607(n: int) -> int:
    """OEIS A275607: a(n) = 2*3^n*(n+1)/(2n^2+n) * binom(2n+1, n-1).

    Evaluated over exact rationals; a non-integral result would indicate an
    implementation bug and raises ArithmeticError.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    val = Fraction(2 * 3 ** n * (n + 1), 2 * n * n + n) * comb(2 * n + 1, n - 1)
    if val.denominator != 1:
        raise ArithmeticError(f"a275607({n}) is not integral: {val}")
    return int(val)


def series_coeffs(K: int) -> list[Fraction]:
    """Coefficients of x^0..x^K of (1+6x)(1-sqrt(1-12x))/(54x), exactly.

    sqrt(1-12x) is expanded by the binomial-series recurrence
    c_0 = 1, c_k = c_(k-1) * 12*(2k-3)/(2k), all over Fraction.
    The coefficient of x^k equals t_count(2k) for k >= 1; the constant
    term is 1/9.
    """
    if K < 0:
        raise ValueError(f"need K >= 0, got {K}")
    c = [Fraction(1)]
    for k in range(1, K + 2):
        c.append(c[-1] * Fraction(12 * (2 * k - 3), 2 * k))
    # (1+6x)(1-sqrt(1-12x)) has coefficient -c_j - 6*c_(j-1) at x^j (j >= 1)
    out = []
    for k in range(K + 1):
        d = -c[k + 1] - (6 * c[k] if k >= 1 else 0)
        out.append(d / 54)
    return out
