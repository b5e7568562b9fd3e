"""Catalan, Euler, Stirling and lambda-Changhee numbers in exact arithmetic,
with identity checks and truncated fermionic p-adic integrals."""

from .algebra import (
    BadConstantTerm,
    NonUnitDivisor,
    NonzeroInnerConstant,
    Poly,
    TruncSeries,
    binomial_series,
    exp_series,
    expm1_series,
    log_series,
    series_compose,
    series_div,
    series_mul,
    series_sqrt,
)
from .identities import IDENTITY_IDS, VerifyReport, verify, verify_all
from .numbers import (
    catalan,
    catalan_polynomials,
    catalan_via_gf,
    changhee_half_polynomials,
    changhee_lambda,
    changhee_polynomials,
    euler_numbers,
    euler_polynomials,
    falling_factorial,
    stirling1,
    stirling2,
)
from .padic import (
    AT_LEAST_K,
    PAdicApprox,
    exact_integral,
    fermionic_integral_truncated,
    functional_equation_check,
    half_binomial,
    padic_from_rational,
    valuation,
    witt_check,
)

__version__ = "0.1.0"
