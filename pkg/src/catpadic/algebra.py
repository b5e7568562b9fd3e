"""Exact polynomial and truncated power-series arithmetic over the rationals.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is a dense
polynomial in ``x``; :class:`TruncSeries` is a power series in ``t`` whose
coefficients (either ``Fraction`` or ``Poly``) are known up to ``t**order``.
Every value is immutable and every operation returns a new object.

Binary series operations truncate to the smaller of the two orders::

    >>> s = TruncSeries.from_coeffs([1, 1], 3)   # 1 + t, known to t^3
    >>> (s * s).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(1, 1), Fraction(0, 1))
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Callable, Iterable, Sequence, Union

__all__ = [
    "Poly",
    "TruncSeries",
    "NonUnitDivisor",
    "BadConstantTerm",
    "NonzeroInnerConstant",
    "as_fraction",
    "series_mul",
    "series_div",
    "series_sqrt",
    "series_compose",
    "series_pow",
    "binomial_series",
    "log_series",
    "exp_series",
    "expm1_series",
    "egf_to_ogf",
    "ogf_to_egf",
]


class NonUnitDivisor(ZeroDivisionError):
    """Divisor series has a non-invertible constant term."""


class BadConstantTerm(ValueError):
    """Square root requested of a series whose constant term is not 1."""


class NonzeroInnerConstant(ValueError):
    """Composition needs an inner series with zero constant term."""


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {value!r} as an exact rational")


class Poly:
    """Dense univariate polynomial in ``x`` with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``.  Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __call__(self, value):
        acc = value * 0
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def shift(self, n) -> "Poly":
        """Return ``x -> f(x + n)``."""
        result = Poly()
        step = Poly((n, 1))
        for c in reversed(self._coeffs):
            result = result * step + c
        return result

    def scale_x(self, a) -> "Poly":
        """Return ``x -> f(a*x)``."""
        a = as_fraction(a)
        return Poly(c * a**k for k, c in enumerate(self._coeffs))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        try:
            return Poly((as_fraction(other),))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                s = as_fraction(other)
            except TypeError:
                return NotImplemented
            return Poly(c * s for c in self._coeffs)
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if not other.is_constant() or other.is_zero():
                return NotImplemented
            other = other._coeffs[0]
        s = as_fraction(other)
        return Poly(c / s for c in self._coeffs)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == Poly((as_fraction(other),))._coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self._coeffs]})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                xk = "x" if k == 1 else f"x^{k}"
                body = xk if mag == 1 else f"{mag}*{xk}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


Coeff = Union[Fraction, Poly]


def _normalize_coeff(c):
    return c if isinstance(c, Poly) else as_fraction(c)


def _zero_like(c):
    return Poly() if isinstance(c, Poly) else Fraction(0)


def _inverse(c):
    if isinstance(c, Poly):
        if c.is_zero() or not c.is_constant():
            raise NonUnitDivisor(f"constant term {c} is not a unit")
        return Poly((1 / c.coeff(0),))
    if c == 0:
        raise NonUnitDivisor("constant term is zero")
    return 1 / c


class TruncSeries:
    """Power series in ``t`` with coefficients known through ``t**order``.

    Coefficients are raw (ordinary) coefficients of ``t**n``; use
    :func:`egf_to_ogf` / :func:`ogf_to_egf` to switch to the ``n!``-scaled
    view.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self._coeffs = tuple(_normalize_coeff(c) for c in coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int) -> "TruncSeries":
        """Pad (with zeros) or cut ``coeffs`` to exactly ``order + 1`` terms."""
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = [_normalize_coeff(c) for c in list(coeffs)[: order + 1]]
        zero = _zero_like(cs[0]) if cs else Fraction(0)
        cs.extend([zero] * (order + 1 - len(cs)))
        return cls(cs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def t(cls, order: int) -> "TruncSeries":
        return cls.from_coeffs([0, 1], order)

    @classmethod
    def from_function(cls, fn: Callable[[int], Coeff], order: int) -> "TruncSeries":
        return cls([fn(n) for n in range(order + 1)])

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int):
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order}")
        return TruncSeries(self._coeffs[: order + 1])

    def map(self, fn: Callable) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self._coeffs])

    def scale_t(self, a) -> "TruncSeries":
        """Substitute ``t -> a*t``."""
        a = as_fraction(a)
        return TruncSeries([c * a**n for n, c in enumerate(self._coeffs)])

    def evaluate_x(self, x) -> "TruncSeries":
        """Evaluate Poly coefficients at ``x``, giving a Fraction series."""
        return self.map(lambda c: c(as_fraction(x)) if isinstance(c, Poly) else c)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        if isinstance(other, (Poly, int, Fraction, Rational)) and not isinstance(other, bool):
            return TruncSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncSeries([self._coeffs[k] + other._coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (Poly, int, Fraction, Rational)) and not isinstance(other, bool):
            return self.map(lambda c: c * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Poly, int, Fraction, Rational)) and not isinstance(other, bool):
            return self.map(lambda c: other * c)
        return NotImplemented

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def __pow__(self, k: int):
        return series_pow(self, k)

    def __call__(self, inner: "TruncSeries") -> "TruncSeries":
        return series_compose(self, inner)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self._coeffs]}, order={self.order})"


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    zero = Poly() if isinstance(bc[0], Poly) else _zero_like(ac[0])
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                acc = acc + ac[i] * bc[k - i]
        out.append(acc)
    return TruncSeries(out)


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Quotient ``q`` with ``q * b == a`` through the common order.

    Raises :class:`NonUnitDivisor` if ``b[0]`` is zero (or a non-constant
    polynomial).
    """
    n = min(a.order, b.order)
    inv = _inverse(b[0])
    q = []
    for k in range(n + 1):
        acc = a[k]
        for i in range(1, k + 1):
            if b[i]:
                acc = acc - b[i] * q[k - i]
        q.append(acc * inv)
    return TruncSeries(q)


def series_sqrt(a: TruncSeries) -> TruncSeries:
    """Square root with constant term 1 of a series with constant term 1."""
    if a[0] != 1:
        raise BadConstantTerm(f"constant term is {a[0]}, expected 1")
    r = [a[0]]
    for k in range(1, a.order + 1):
        acc = a[k]
        for i in range(1, k):
            acc = acc - r[i] * r[k - i]
        r.append(acc / 2)
    return TruncSeries(r)


def series_pow(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        return series_div(TruncSeries.constant(1, a.order), series_pow(a, -k))
    result = TruncSeries.constant(_zero_like(a[0]) + 1, a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        base = series_mul(base, base)
        k >>= 1
    return result


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """``outer(inner(t))`` truncated to the smaller order (Horner scheme)."""
    if inner[0] != 0:
        raise NonzeroInnerConstant(f"inner constant term is {inner[0]}")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = TruncSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        # inner has no constant term, so acc*inner never needs terms past n
        acc = series_mul(acc, inner) + TruncSeries.constant(outer[k], n)
    return acc


def binomial_series(lam, order: int) -> TruncSeries:
    """Coefficients ``binom(lam, n)`` of ``(1 + t)**lam`` for rational ``lam``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    lam = as_fraction(lam)
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * (lam - (n - 1)) / n)
    return TruncSeries(out)


def log_series(order: int) -> TruncSeries:
    """``log(1 + t)``."""
    return TruncSeries.from_coeffs(
        [Fraction(0)] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)], order
    )


def exp_series(order: int) -> TruncSeries:
    """``exp(t)``."""
    return TruncSeries([Fraction(1, factorial(n)) for n in range(order + 1)])


def expm1_series(order: int) -> TruncSeries:
    """``exp(t) - 1``, composable as an inner series."""
    return TruncSeries.from_coeffs(
        [Fraction(0)] + [Fraction(1, factorial(n)) for n in range(1, order + 1)], order
    )


def egf_to_ogf(values: Sequence) -> TruncSeries:
    """Series ``sum values[n] t^n / n!`` from the ``n!``-scaled values."""
    return TruncSeries([_normalize_coeff(v) * Fraction(1, factorial(n)) for n, v in enumerate(values)])


def ogf_to_egf(series: TruncSeries) -> list:
    """Inverse of :func:`egf_to_ogf`: ``[n! * series[n] for n ...]``."""
    return [c * factorial(n) for n, c in enumerate(series.coeffs)]
