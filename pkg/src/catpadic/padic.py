"""Arithmetic in Z/p^K and truncated fermionic p-adic integrals.

The fermionic integral of ``f`` over ``Z_p`` is the limit, as ``N`` grows, of
the alternating sums ``sum_{x < p^N} (-1)^x f(x)``.  Here each sum is taken
exactly and reduced mod ``p^K``; watching the p-adic valuation of the
distance to a known closed form shows the limit settling in.

Only odd primes are accepted, since ``x/2`` has to make sense in ``Z_p``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Union

from .algebra import Poly, as_fraction
from .numbers import catalan, euler_numbers

__all__ = [
    "PAdicApprox",
    "AT_LEAST_K",
    "NotOddPrime",
    "DenominatorNotUnit",
    "FactorialNotCancelled",
    "PrecisionMismatch",
    "LevelResult",
    "IntegralExperiment",
    "FunctionalEquationReport",
    "is_odd_prime",
    "padic_from_rational",
    "valuation",
    "rational_valuation",
    "fermionic_integral_truncated",
    "half_binomial",
    "witt_reference",
    "witt_check",
    "polynomial_check",
    "monomial_check",
    "exact_integral",
    "functional_equation_check",
]


class NotOddPrime(ValueError):
    pass


class DenominatorNotUnit(ValueError):
    """The rational has a denominator divisible by p, so it is not in Z_p."""


class FactorialNotCancelled(ArithmeticError):
    """Numerator of C(x/2, n) was not divisible by the p-part of n!."""


class PrecisionMismatch(ValueError):
    pass


class _AtLeastK:
    """Valuation of a residue that is zero at the working precision.

    Orders above every integer so valuations can be compared directly.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_LEAST_K"

    def __str__(self):
        return "≥K"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("AT_LEAST_K")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


AT_LEAST_K = _AtLeastK()

Valuation = Union[int, _AtLeastK]


@lru_cache(maxsize=256)
def is_odd_prime(p: int) -> bool:
    """Trial division; inputs here are small."""
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_params(p: int, K: int) -> None:
    if not is_odd_prime(p):
        raise NotOddPrime(f"{p} is not an odd prime")
    if not isinstance(K, int) or K < 1:
        raise ValueError(f"precision must be a positive integer, got {K!r}")


@dataclass(frozen=True)
class PAdicApprox:
    """An element of Z/p^K, stored as its canonical residue in ``[0, p^K)``."""

    prime: int
    precision: int
    residue: int

    def __post_init__(self):
        _check_params(self.prime, self.precision)
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.prime**self.precision

    def _coerce(self, other) -> "PAdicApprox":
        if isinstance(other, PAdicApprox):
            if (other.prime, other.precision) != (self.prime, self.precision):
                raise PrecisionMismatch(
                    f"Z/{self.prime}^{self.precision} vs Z/{other.prime}^{other.precision}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return padic_from_rational(other, self.prime, self.precision)
        return NotImplemented

    def _new(self, residue: int) -> "PAdicApprox":
        return PAdicApprox(self.prime, self.precision, residue)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self.residue + other.residue)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self.residue - other.residue)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return self._new(-self.residue)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._new(self.residue * other.residue)

    __rmul__ = __mul__

    def inverse(self) -> "PAdicApprox":
        if self.residue % self.prime == 0:
            raise ZeroDivisionError("not a unit in Z_p")
        return self._new(pow(self.residue, -1, self.modulus))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def valuation(self) -> Valuation:
        return valuation(self)

    def __int__(self):
        return self.residue

    def __str__(self):
        return f"{self.residue} (mod {self.prime}^{self.precision})"


def padic_from_rational(r, p: int, K: int) -> PAdicApprox:
    """Image of a p-integral rational in Z/p^K."""
    _check_params(p, K)
    r = as_fraction(r)
    if r.denominator % p == 0:
        raise DenominatorNotUnit(f"{r} has denominator divisible by {p}")
    mod = p**K
    return PAdicApprox(p, K, r.numerator * pow(r.denominator, -1, mod))


def valuation(a: PAdicApprox) -> Valuation:
    """Largest ``e < K`` with ``p^e | residue``, or ``AT_LEAST_K`` for zero."""
    return _residue_valuation(a.residue, a.prime)


def _residue_valuation(residue: int, p: int) -> Valuation:
    if residue == 0:
        return AT_LEAST_K
    e = 0
    while residue % p == 0:
        residue //= p
        e += 1
    return e


def rational_valuation(r, p: int, cap: int) -> Valuation:
    """p-adic valuation of an exact rational, ``AT_LEAST_K`` if at least ``cap``."""
    r = as_fraction(r)
    if r == 0:
        return AT_LEAST_K
    e = 0
    num, den = r.numerator, r.denominator
    while num % p == 0:
        num //= p
        e += 1
    while den % p == 0:
        den //= p
        e -= 1
    return AT_LEAST_K if e >= cap else e


def fermionic_integral_truncated(f: Callable, p: int, N: int, K: int) -> PAdicApprox:
    """``sum_{x=0}^{p^N - 1} (-1)^x f(x)`` reduced mod ``p^K``.

    ``f`` may return PAdicApprox values (with matching p and K), ints or
    p-integral Fractions.
    """
    _check_params(p, K)
    if N < 1:
        raise ValueError("level N must be at least 1")
    mod = p**K
    total = 0
    for x in range(p**N):
        v = f(x)
        if isinstance(v, PAdicApprox):
            if (v.prime, v.precision) != (p, K):
                raise PrecisionMismatch("integrand value has the wrong ring")
            v = v.residue
        elif isinstance(v, Fraction):
            v = padic_from_rational(v, p, K).residue
        total += -v if x & 1 else v
    return PAdicApprox(p, K, total % mod)


def _p_part(n: int, p: int) -> int:
    e = 0
    while n % p == 0 and n:
        n //= p
        e += 1
    return e


class _HalfBinomial:
    """Evaluator for ``x -> C(x/2, n)`` mod ``p^K`` at integer ``x``.

    The falling product ``prod_j (x/2 - j)`` is formed mod ``p^(K + v)`` where
    ``v = v_p(n!)``; it must then be divisible by ``p^v`` and the quotient is
    multiplied by the inverse of the unit part of ``n!``.
    """

    def __init__(self, n: int, p: int, K: int):
        self.n, self.p, self.K = n, p, K
        self.v = sum(_p_part(j, p) for j in range(1, n + 1))
        self.mod = p**K
        self.ext_mod = p ** (K + self.v)
        self.pv = p**self.v
        self.inv2 = pow(2, -1, self.ext_mod)
        self.unit_inv = pow(factorial(n) // self.pv, -1, self.mod)

    def __call__(self, x: int) -> int:
        ext = self.ext_mod
        y = x * self.inv2 % ext
        prod = 1
        for j in range(self.n):
            prod = prod * (y - j) % ext
        if prod % self.pv:
            raise FactorialNotCancelled(
                f"C({x}/2, {self.n}) numerator not divisible by {self.p}^{self.v}"
            )
        return (prod // self.pv) * self.unit_inv % self.mod


def half_binomial(x: int, n: int, p: int, K: int) -> PAdicApprox:
    """``C(x/2, n) = prod_{j<n} (x/2 - j) / n!`` in Z/p^K."""
    _check_params(p, K)
    if n < 0:
        raise ValueError("n must be non-negative")
    return PAdicApprox(p, K, _HalfBinomial(n, p, K)(x))


@dataclass(frozen=True)
class LevelResult:
    N: int
    residue: int
    valuation_of_difference: Valuation


def _val_json(v: Valuation):
    return str(v) if v is AT_LEAST_K else v


@dataclass(frozen=True)
class IntegralExperiment:
    """Truncated integrals at levels ``N`` against an exact reference value."""

    prime: int
    precision: int
    integrand: str
    levels: tuple
    reference: PAdicApprox
    reference_value: Fraction = field(default=None, compare=False)

    @property
    def valuations(self) -> list:
        return [lv.valuation_of_difference for lv in self.levels]

    @property
    def final_valuation(self) -> Valuation:
        return self.levels[-1].valuation_of_difference

    def is_monotone(self) -> bool:
        """Valuation of (level sum - reference) never decreases with ``N``."""
        vals = self.valuations
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def refinement_valuations(self) -> list:
        """Valuation of (level N sum - level N+1 sum) for consecutive levels."""
        p = self.prime
        return [
            _residue_valuation((b.residue - a.residue) % p**self.precision, p)
            for a, b in zip(self.levels, self.levels[1:])
        ]

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "precision": self.precision,
            "integrand": self.integrand,
            "levels": [
                {
                    "N": lv.N,
                    "residue": str(lv.residue),
                    "valuation_of_difference": _val_json(lv.valuation_of_difference),
                }
                for lv in self.levels
            ],
            "reference_residue": str(self.reference.residue),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)


def _run_levels(
    fn: Callable[[int], int], p: int, N_max: int, K: int, reference, integrand: str
) -> IntegralExperiment:
    # Level sums are nested prefixes, so one pass up to p^N_max covers all levels.
    _check_params(p, K)
    if N_max < 1:
        raise ValueError("N_max must be at least 1")
    ref = padic_from_rational(reference, p, K)
    mod = p**K
    levels = []
    total = 0
    start = 0
    for N in range(1, N_max + 1):
        stop = p**N
        for x in range(start, stop):
            v = fn(x)
            total += -v if x & 1 else v
        start = stop
        residue = total % mod
        levels.append(LevelResult(N, residue, _residue_valuation((residue - ref.residue) % mod, p)))
    return IntegralExperiment(p, K, integrand, tuple(levels), ref, as_fraction(reference))


def witt_reference(n: int) -> Fraction:
    """``(-1)^n C_n / 4^n``, the closed form for the integral of ``C(x/2, n)``."""
    return (-1) ** n * catalan(n) / 4**n


def witt_check(n: int, p: int, N_max: int, K: int) -> IntegralExperiment:
    """Truncated integrals of ``C(x/2, n)`` at levels ``1..N_max`` vs ``(-1)^n C_n / 4^n``."""
    _check_params(p, K)
    if n < 0:
        raise ValueError("n must be non-negative")
    ref = witt_reference(n)
    # C_n is an integer, so only powers of 2 appear in the denominator.
    assert ref.denominator & (ref.denominator - 1) == 0
    return _run_levels(_HalfBinomial(n, p, K), p, N_max, K, ref, f"half_binomial(n={n})")


def _poly_residue_fn(f: Poly, p: int, K: int) -> Callable[[int], int]:
    mod = p**K
    cs = [padic_from_rational(c, p, K).residue for c in f.coeffs]

    def fn(x: int) -> int:
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % mod
        return acc

    return fn


def polynomial_check(f: Poly, p: int, N_max: int, K: int, integrand: str = None) -> IntegralExperiment:
    """Truncated integrals of a polynomial against :func:`exact_integral`."""
    return _run_levels(
        _poly_residue_fn(f, p, K), p, N_max, K, exact_integral(f), integrand or f"poly({f})"
    )


def monomial_check(m: int, p: int, N_max: int, K: int) -> IntegralExperiment:
    """Truncated integrals of ``x^m``, which converge to ``E_m``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return polynomial_check(Poly.monomial(m), p, N_max, K, integrand=f"monomial(m={m})")


def exact_integral(f: Poly) -> Fraction:
    """``sum_m f_m E_m``: the integral of ``x^m`` is the Euler number ``E_m``."""
    if f.is_zero():
        return Fraction(0)
    e = euler_numbers(f.degree)
    return sum((c * e[m] for m, c in enumerate(f.coeffs)), Fraction(0))


@dataclass(frozen=True)
class FunctionalEquationReport:
    """``I(f_n) + (-1)^(n-1) I(f) = 2 sum_{l<n} (-1)^(n-1-l) f(l)``, checked two ways."""

    poly: Poly
    shift: int
    exact_lhs: Fraction
    exact_rhs: Fraction
    prime: int
    precision: int
    levels: tuple  # LevelResult; residue is the truncated lhs, valuation is of lhs - rhs

    @property
    def exact_pass(self) -> bool:
        return self.exact_lhs == self.exact_rhs

    @property
    def defect_valuation(self) -> Valuation:
        return self.levels[-1].valuation_of_difference

    def is_monotone(self) -> bool:
        vals = [lv.valuation_of_difference for lv in self.levels]
        return all(a <= b for a, b in zip(vals, vals[1:]))

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "precision": self.precision,
            "integrand": f"shift(f={self.poly}, n={self.shift})",
            "exact_lhs": str(self.exact_lhs),
            "exact_rhs": str(self.exact_rhs),
            "exact_pass": self.exact_pass,
            "levels": [
                {
                    "N": lv.N,
                    "residue": str(lv.residue),
                    "valuation_of_difference": _val_json(lv.valuation_of_difference),
                }
                for lv in self.levels
            ],
            "reference_residue": str(padic_from_rational(self.exact_rhs, self.prime, self.precision).residue),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)


def _shift_rhs(f: Poly, n: int) -> Fraction:
    return 2 * sum(((-1) ** (n - 1 - l) * f(Fraction(l)) for l in range(n)), Fraction(0))


def functional_equation_check(f: Poly, n: int, p: int, N: int, K: int) -> FunctionalEquationReport:
    """Check the shift relation exactly and with truncated sums at levels ``1..N``."""
    if n < 1:
        raise ValueError("shift n must be at least 1")
    _check_params(p, K)
    sign = (-1) ** (n - 1)
    shifted = f.shift(n)
    exact_lhs = exact_integral(shifted) + sign * exact_integral(f)
    exact_rhs = _shift_rhs(f, n)

    mod = p**K
    rhs = padic_from_rational(exact_rhs, p, K).residue
    f_res = _poly_residue_fn(f, p, K)
    g_res = _poly_residue_fn(shifted, p, K)
    levels = []
    for level in range(1, N + 1):
        a = fermionic_integral_truncated(g_res, p, level, K).residue
        b = fermionic_integral_truncated(f_res, p, level, K).residue
        lhs = (a + sign * b) % mod
        levels.append(LevelResult(level, lhs, _residue_valuation((lhs - rhs) % mod, p)))
    return FunctionalEquationReport(f, n, exact_lhs, exact_rhs, p, K, tuple(levels))
