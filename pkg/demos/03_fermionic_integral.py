"""
Truncated fermionic integrals in Z/p^K
======================================

The integral of ``f`` is approximated by ``sum_{x < p^N} (-1)^x f(x)``.  For
``f(x) = C(x/2, n)`` the limit is ``(-1)^n C_n / 4^n``.  The p-adic valuation
of the distance to that value grows with the level ``N``.
"""

from catpadic.algebra import Poly
from catpadic.padic import functional_equation_check, monomial_check, witt_check

# %%
# n = 1 at p = 5: the limit is -1/4.
exp = witt_check(1, 5, 6, 12)
print(f"reference residue mod 5^12: {exp.reference.residue}")
for lv in exp.levels:
    print(f"  N={lv.N}: residue={lv.residue:>10}  v_5(diff)={lv.valuation_of_difference}")

# %%
# A few more indices and primes.  "≥K" means equal at working precision.
for p in (3, 5, 7):
    for n in (2, 3, 4):
        vals = witt_check(n, p, 5, 12).valuations
        print(f"p={p} n={n}: {[str(v) for v in vals]}")

# %%
# For p = 3, n = 2 the first level already equals 1/8 exactly, so the
# valuation starts at "≥K" and then drops to 3 before climbing again.

# %%
# Monomials converge to Euler numbers: the integral of x^3 is E_3 = 1/4.
print(monomial_check(3, 3, 5, 12).to_json())

# %%
# The shift relation, exactly and at finite level.
report = functional_equation_check(Poly.monomial(2), 3, 5, 4, 8)
print("exact:", report.exact_lhs, "=", report.exact_rhs)
print("defect valuations:", [str(lv.valuation_of_difference) for lv in report.levels])
