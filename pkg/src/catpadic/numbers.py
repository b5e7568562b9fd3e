"""Number and polynomial families: Stirling, Euler, Catalan, lambda-Changhee.

Most families come in two flavours, a recurrence or closed form and a
generating-function expansion, so the two can be checked against each other.

Conventions used throughout:

* ``E_n`` are the values ``E_n(0)`` of the Euler polynomials generated by
  ``2 e^{xt} / (e^t + 1)``; ``E_1 = -1/2`` and ``E_{2k} = 0`` for ``k >= 1``.
  These are not the integer secant numbers.
* ``S1`` is the signed first-kind triangle, i.e. the coefficients of the
  falling factorial ``(x)_n = x(x-1)...(x-n+1)``.
* ``S1(0, 0) = S2(0, 0) = 1`` and every entry outside ``0 <= l <= n`` is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from .algebra import (
    Poly,
    TruncSeries,
    as_fraction,
    binomial_series,
    expm1_series,
    ogf_to_egf,
    series_div,
    series_mul,
    series_sqrt,
)

__all__ = [
    "SequenceTable",
    "TriangleTable",
    "PolyFamily",
    "falling_factorial",
    "stirling1",
    "stirling2",
    "stirling1_table",
    "stirling2_table",
    "euler_numbers",
    "euler_numbers_via_gf",
    "euler_polynomials",
    "catalan",
    "catalan_via_gf",
    "catalan_via_sqrt_quotient",
    "changhee_lambda",
    "changhee_polynomials",
    "changhee_half_polynomials",
    "catalan_polynomials",
    "binomial_poly_series",
]


@dataclass(frozen=True)
class SequenceTable:
    name: str
    values: tuple
    params: Optional[Fraction] = None

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self):
        return len(self.values)

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class TriangleTable:
    """Triangular array; entries outside ``0 <= l <= n`` read as zero."""

    name: str
    rows: tuple

    def __call__(self, n: int, l: int) -> Fraction:
        if l < 0 or l > n:
            return Fraction(0)
        if n >= len(self.rows):
            raise IndexError(f"{self.name} table only holds rows 0..{len(self.rows) - 1}")
        return self.rows[n][l]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1


@dataclass(frozen=True)
class PolyFamily:
    name: str
    members: tuple
    params: Optional[Fraction] = None

    def __getitem__(self, n: int) -> Poly:
        return self.members[n]

    def __len__(self):
        return len(self.members)

    def at(self, x) -> tuple:
        return tuple(p(as_fraction(x)) for p in self.members)


def falling_factorial(n: int) -> Poly:
    """``(x)_n = x (x - 1) ... (x - n + 1)``, with ``(x)_0 = 1``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    p = Poly((1,))
    for j in range(n):
        p = p * Poly((-j, 1))
    return p


# Rows are appended as needed and never rewritten.
_S1_ROWS: list = [(Fraction(1),)]
_S2_ROWS: list = [(Fraction(1),)]


def _grow(rows: list, n: int, weight) -> None:
    while len(rows) <= n:
        m = len(rows) - 1
        prev = rows[m]
        row = []
        for l in range(m + 2):
            left = prev[l - 1] if l >= 1 else 0
            same = prev[l] if l <= m else 0
            row.append(Fraction(left + weight(m, l) * same))
        rows.append(tuple(row))


def _s1_weight(m, l):
    return -m


def _s2_weight(m, l):
    return l


def stirling1(n: int, l: int) -> Fraction:
    """Signed Stirling number of the first kind.

    ``S1(n+1, l) = S1(n, l-1) - n S1(n, l)``.
    """
    if n < 0 or l < 0 or l > n:
        return Fraction(0)
    _grow(_S1_ROWS, n, _s1_weight)
    return _S1_ROWS[n][l]


def stirling2(n: int, l: int) -> Fraction:
    """Stirling number of the second kind, ``S2(n+1, l) = l S2(n, l) + S2(n, l-1)``."""
    if n < 0 or l < 0 or l > n:
        return Fraction(0)
    _grow(_S2_ROWS, n, _s2_weight)
    return _S2_ROWS[n][l]


def stirling1_table(max_n: int) -> TriangleTable:
    _grow(_S1_ROWS, max_n, _s1_weight)
    return TriangleTable("stirling1", tuple(_S1_ROWS[: max_n + 1]))


def stirling2_table(max_n: int) -> TriangleTable:
    _grow(_S2_ROWS, max_n, _s2_weight)
    return TriangleTable("stirling2", tuple(_S2_ROWS[: max_n + 1]))


def _check_max_n(max_n: int) -> None:
    if max_n < 0:
        raise ValueError("max_n must be non-negative")


def euler_numbers(max_n: int) -> SequenceTable:
    """``E_0 .. E_max_n`` from ``E_n = -1/2 * sum_{l<n} binom(n, l) E_l``."""
    _check_max_n(max_n)
    values = [Fraction(1)]
    for n in range(1, max_n + 1):
        values.append(-sum(comb(n, l) * values[l] for l in range(n)) / 2)
    return SequenceTable("euler", tuple(values))


def euler_numbers_via_gf(max_n: int) -> SequenceTable:
    """``E_n`` as ``n!`` times the coefficients of ``2 / (e^t + 1)``."""
    _check_max_n(max_n)
    denom = expm1_series(max_n) + 2
    gf = series_div(TruncSeries.constant(2, max_n), denom)
    return SequenceTable("euler", tuple(ogf_to_egf(gf)))


def euler_polynomials(max_n: int) -> PolyFamily:
    """``E_n(x) = sum_l binom(n, l) E_l x^(n-l)``."""
    e = euler_numbers(max_n)
    members = []
    for n in range(max_n + 1):
        members.append(Poly([comb(n, n - k) * e[n - k] for k in range(n + 1)]))
    return PolyFamily("euler", tuple(members))


def catalan(n: int) -> Fraction:
    """Closed form ``binom(2n, n) / (n + 1)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return Fraction(comb(2 * n, n), n + 1)


def _sqrt_one_minus_4t(order: int) -> TruncSeries:
    return series_sqrt(TruncSeries.from_coeffs([1, -4], order))


def catalan_via_gf(max_n: int) -> SequenceTable:
    """Coefficients of ``2 / (1 + sqrt(1 - 4t))``."""
    _check_max_n(max_n)
    gf = series_div(TruncSeries.constant(2, max_n), _sqrt_one_minus_4t(max_n) + 1)
    return SequenceTable("catalan", gf.coeffs)


def catalan_via_sqrt_quotient(max_n: int) -> SequenceTable:
    """Coefficients of ``(1 - sqrt(1 - 4t)) / (2t)``.

    The numerator has no constant term, so dividing by ``t`` is a shift; one
    extra order is computed to make up for it.
    """
    _check_max_n(max_n)
    numer = 1 - _sqrt_one_minus_4t(max_n + 1)
    return SequenceTable("catalan", tuple(c / 2 for c in numer.coeffs[1:]))


def changhee_lambda(lam, max_n: int) -> SequenceTable:
    """``Ch_{n,lam}``: ``n!`` times the coefficients of ``2 / ((1 + t)^lam + 1)``."""
    _check_max_n(max_n)
    lam = as_fraction(lam)
    gf = series_div(TruncSeries.constant(2, max_n), binomial_series(lam, max_n) + 1)
    return SequenceTable("changhee", tuple(ogf_to_egf(gf)), params=lam)


def binomial_poly_series(scale, order: int) -> TruncSeries:
    """``(1 + t)^(scale * x)`` as a series with Poly coefficients in ``x``.

    Coefficient ``n`` is ``sum_j (scale x)^j S1(n, j) / n!``, from expanding
    ``exp(scale x log(1 + t))``.
    """
    scale = as_fraction(scale)
    coeffs = []
    for n in range(order + 1):
        coeffs.append(
            Poly([stirling1(n, j) * scale**j for j in range(n + 1)]) / factorial(n)
        )
    return TruncSeries(coeffs)


def changhee_polynomials(lam, max_n: int) -> PolyFamily:
    """``Ch_{n,lam}(x)`` from ``2 (1 + t)^(lam x) / ((1 + t)^lam + 1)``."""
    _check_max_n(max_n)
    lam = as_fraction(lam)
    numbers = series_div(TruncSeries.constant(2, max_n), binomial_series(lam, max_n) + 1)
    gf = series_mul(numbers, binomial_poly_series(lam, max_n))
    members = tuple(Poly(c.coeffs) for c in ogf_to_egf(gf))
    return PolyFamily("changhee", members, params=lam)


def changhee_half_polynomials(max_n: int) -> PolyFamily:
    return changhee_polynomials(Fraction(1, 2), max_n)


def catalan_polynomials(max_n: int) -> PolyFamily:
    """``C_n(x)``: ordinary coefficients of ``2 (1 - 4t)^(x/2) / (1 + sqrt(1 - 4t))``."""
    _check_max_n(max_n)
    cat = TruncSeries(catalan_via_gf(max_n).values)
    gf = series_mul(cat, binomial_poly_series(Fraction(1, 2), max_n).scale_t(-4))
    return PolyFamily("catalan", tuple(gf.coeffs))
