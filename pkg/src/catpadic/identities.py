"""Exact, index-by-index checks of the Catalan / Euler / Changhee identities.

Each identity is evaluated with both sides computed independently in exact
arithmetic.  :func:`verify` returns a :class:`VerifyReport` which serializes
to a deterministic JSON record::

    >>> verify("T2", 3).passed
    True

Identity ids:

``T1``  ``sum_m 2^-m E_m S1(n, m) = Ch_{n,1/2}``
``T2``  ``C_n = (-1)^n 4^n Ch_{n,1/2} / n!``
``T3``  ``(-1)^n C_n / 4^n = (1/n!) sum_m 2^-m E_m S1(n, m)``; with a
        ``prime`` parameter also runs the truncated p-adic integrals
``T4``  ``C_n = (-1)^n / n! sum_m 2^(2n-m) E_m S1(n, m)``
``T5``  Changhee-Catalan convolution, ``n >= 1``
``T6``  ``E_m = sum_n C_n (-1)^n 2^(m-2n) n! S2(m, n)``
``T7``  ``Ch_{n,1/2}(x)`` as a double sum over ``S1``
``T8``  ``C_n(x)`` as a double sum over ``S1``
``C9``  ``C_n = (-1)^(n+1) 4^n (2n-1) / (n+1)! sum_m 2^-m S1(n, m)``
``E5``  ``E_m(x) = lam^-m sum_n Ch_{n,lam}(x) S2(m, n)`` for each ``lam``
``R29`` coefficients of ``sqrt(1+t)`` against ``(1/n!) sum_m 2^-m S1(n, m)``
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Optional

from .algebra import Poly, as_fraction
from .padic import witt_check
from .numbers import (
    catalan,
    catalan_polynomials,
    changhee_half_polynomials,
    changhee_lambda,
    changhee_polynomials,
    euler_numbers,
    euler_polynomials,
    stirling1,
    stirling2,
)

__all__ = [
    "IDENTITY_IDS",
    "DEFAULT_LAMBDAS",
    "UnknownIdentity",
    "ZeroLambda",
    "Outcome",
    "VerifyReport",
    "verify",
    "verify_all",
    "render",
]

IDENTITY_IDS = ("T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8", "C9", "E5", "R29")
DEFAULT_LAMBDAS = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(1, 3), Fraction(-1))

HALF = Fraction(1, 2)


class UnknownIdentity(KeyError):
    pass


class ZeroLambda(ValueError):
    pass


def render(value):
    """Exact text form: ``"num/den"`` for rationals, coefficient list for polys."""
    if isinstance(value, Poly):
        return [str(c) for c in value.coeffs]
    return str(as_fraction(value))


@dataclass(frozen=True)
class Outcome:
    n: int
    lhs: object
    rhs: object
    param: Optional[Fraction] = None
    extra: Optional[dict] = None

    @property
    def passed(self) -> bool:
        ok = self.lhs == self.rhs
        if self.extra is not None:
            ok = ok and self.extra.get("pass", True)
        return ok

    @property
    def difference(self):
        return self.lhs - self.rhs

    def to_dict(self) -> dict:
        d = {"n": self.n}
        if self.param is not None:
            d["lambda"] = str(self.param)
        d["lhs"] = render(self.lhs)
        d["rhs"] = render(self.rhs)
        d["pass"] = self.passed
        if not self.passed:
            d["difference"] = render(self.difference)
        if self.extra is not None:
            d.update({k: v for k, v in self.extra.items() if k != "pass"})
        return d


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    start: int
    max_n: int
    outcomes: tuple
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    def failures(self) -> list:
        return [o for o in self.outcomes if not o.passed]

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "range": [self.start, self.max_n],
            "params": self.params,
            "results": [o.to_dict() for o in self.outcomes],
            "pass": self.passed,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kwargs)


def _ch_half(max_n):
    return changhee_lambda(HALF, max_n)


def _s1_half_sum(n: int, e=None, power_shift: int = 0) -> Fraction:
    # sum_m 2^(power_shift - m) [E_m] S1(n, m); E_m omitted when e is None
    total = Fraction(0)
    for m in range(n + 1):
        term = stirling1(n, m) * Fraction(2) ** (power_shift - m)
        if e is not None:
            term *= e[m]
        total += term
    return total


def _t1(max_n, params):
    e, ch = euler_numbers(max_n), _ch_half(max_n)
    return [Outcome(n, _s1_half_sum(n, e), ch[n]) for n in range(max_n + 1)]


def _t2(max_n, params):
    ch = _ch_half(max_n)
    return [
        Outcome(n, catalan(n), (-1) ** n * 4**n * ch[n] / factorial(n))
        for n in range(max_n + 1)
    ]


def _t3(max_n, params):
    e = euler_numbers(max_n)
    out = []
    prime = params.get("prime")
    for n in range(max_n + 1):
        lhs = (-1) ** n * catalan(n) / 4**n
        rhs = _s1_half_sum(n, e) / factorial(n)
        extra = None
        if prime is not None:
            exp = witt_check(n, prime, params.get("levels", 4), params.get("precision", 8))
            extra = {
                "valuations": [
                    str(v) if not isinstance(v, int) else v for v in exp.valuations
                ],
                "pass": exp.is_monotone(),
            }
        out.append(Outcome(n, lhs, rhs, extra=extra))
    return out


def _t4(max_n, params):
    e = euler_numbers(max_n)
    return [
        Outcome(n, catalan(n), (-1) ** n * _s1_half_sum(n, e, 2 * n) / factorial(n))
        for n in range(max_n + 1)
    ]


def _t5(max_n, params):
    ch = _ch_half(max_n)
    out = []
    for n in range(1, max_n + 1):
        rhs = Fraction(0)
        for m in range(n + 1):
            rhs += (
                comb(n, m)
                * catalan(m)
                * ch[n - m]
                * (-1) ** m
                * Fraction(factorial(m + 1), 4**m * (2 * m - 1))
            )
        out.append(Outcome(n, ch[n], rhs))
    return out


def _t6(max_n, params):
    e = euler_numbers(max_n)
    out = []
    for m in range(max_n + 1):
        rhs = sum(
            (
                catalan(n) * (-1) ** n * Fraction(2) ** (m - 2 * n) * factorial(n) * stirling2(m, n)
                for n in range(m + 1)
            ),
            Fraction(0),
        )
        out.append(Outcome(m, e[m], rhs))
    return out


def _half_x_s1(m: int) -> Poly:
    # sum_j (x/2)^j S1(m, j)
    return Poly([stirling1(m, j) * HALF**j for j in range(m + 1)])


def _t7(max_n, params):
    fam = changhee_half_polynomials(max_n)
    ch = _ch_half(max_n)
    inner = [_half_x_s1(m) for m in range(max_n + 1)]
    out = []
    for n in range(max_n + 1):
        rhs = Poly()
        for m in range(n + 1):
            rhs = rhs + inner[m] * (ch[n - m] * comb(n, m))
        out.append(Outcome(n, fam[n], rhs))
    return out


def _t8(max_n, params):
    fam = catalan_polynomials(max_n)
    inner = [_half_x_s1(m) for m in range(max_n + 1)]
    out = []
    for n in range(max_n + 1):
        rhs = Poly()
        for m in range(n + 1):
            rhs = rhs + inner[m] * (Fraction((-4) ** m, factorial(m)) * catalan(n - m))
        out.append(Outcome(n, fam[n], rhs))
    return out


def _c9(max_n, params):
    return [
        Outcome(
            n,
            catalan(n),
            (-1) ** (n + 1) * Fraction(4**n * (2 * n - 1), factorial(n + 1)) * _s1_half_sum(n),
        )
        for n in range(max_n + 1)
    ]


def _e5(max_n, params):
    lambdas = params.get("lambdas", DEFAULT_LAMBDAS)
    euler = euler_polynomials(max_n)
    out = []
    for lam in lambdas:
        ch = changhee_polynomials(lam, max_n)
        for m in range(max_n + 1):
            rhs = Poly()
            for n in range(m + 1):
                rhs = rhs + ch[n] * stirling2(m, n)
            out.append(Outcome(m, euler[m], rhs / lam**m, param=lam))
    return out


def _r29(max_n, params):
    return [
        Outcome(
            n,
            Fraction(comb(2 * n, n) * (-1) ** (n + 1), 4**n * (2 * n - 1)),
            _s1_half_sum(n) / factorial(n),
        )
        for n in range(max_n + 1)
    ]


_DISPATCH: dict = {
    "T1": _t1,
    "T2": _t2,
    "T3": _t3,
    "T4": _t4,
    "T5": _t5,
    "T6": _t6,
    "T7": _t7,
    "T8": _t8,
    "C9": _c9,
    "E5": _e5,
    "R29": _r29,
}


def _normalize_params(identity_id: str, params: Optional[dict]) -> tuple:
    params = dict(params or {})
    shown = {}
    if identity_id == "E5":
        lambdas = tuple(as_fraction(l) for l in params.get("lambdas", DEFAULT_LAMBDAS))
        if any(l == 0 for l in lambdas):
            raise ZeroLambda("lambda = 0 is not allowed")
        if not lambdas:
            raise ValueError("E5 needs at least one lambda")
        params["lambdas"] = lambdas
        shown["lambdas"] = [str(l) for l in lambdas]
    if identity_id == "T3" and params.get("prime") is not None:
        shown.update({k: params[k] for k in ("prime", "precision", "levels") if k in params})
    return params, shown


def verify(identity_id: str, max_n: int, params: Optional[dict] = None) -> VerifyReport:
    """Check one identity for indices up to ``max_n`` (``T5`` starts at 1).

    ``params`` may hold ``lambdas`` (E5) and ``prime``/``precision``/``levels``
    (T3).  Raises :class:`UnknownIdentity` or :class:`ZeroLambda`.
    """
    key = identity_id.upper() if isinstance(identity_id, str) else identity_id
    if key not in _DISPATCH:
        raise UnknownIdentity(identity_id)
    start = 1 if key == "T5" else 0
    if max_n < start:
        raise ValueError(f"{key} needs max_n >= {start}")
    params, shown = _normalize_params(key, params)
    outcomes = _DISPATCH[key](max_n, params)
    return VerifyReport(key, start, max_n, tuple(outcomes), shown)


def verify_all(
    max_n: int, params: Optional[dict] = None, ids: Iterable[str] = IDENTITY_IDS
) -> list:
    return [verify(i, max_n, params) for i in ids]
