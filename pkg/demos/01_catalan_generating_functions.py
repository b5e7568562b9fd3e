"""
Catalan numbers from three directions
=====================================

The closed form ``binom(2n, n) / (n + 1)``, the quotient
``2 / (1 + sqrt(1 - 4t))`` and the shifted root ``(1 - sqrt(1 - 4t)) / (2t)``
all give the same numbers.  Everything below is exact.
"""

from fractions import Fraction

from catpadic import TruncSeries, series_compose, series_div, series_sqrt
from catpadic.numbers import catalan, catalan_via_gf, catalan_via_sqrt_quotient

# %%
# Closed form first.
closed = [catalan(n) for n in range(12)]
print("closed form      ", [int(c) for c in closed])

# %%
# The same numbers as coefficients of two generating functions.
print("2/(1+sqrt(1-4t)) ", [int(c) for c in catalan_via_gf(11).values])
print("(1-sqrt(1-4t))/2t", [int(c) for c in catalan_via_sqrt_quotient(11).values])

# %%
# Substituting ``t -> -4t`` into the lambda = 1/2 Changhee generating function
# ``2 / (1 + sqrt(1 + t))`` lands on the Catalan series as well.
order = 11
changhee_gf = series_div(TruncSeries.constant(2, order), series_sqrt(TruncSeries.from_coeffs([1, 1], order)) + 1)
substituted = series_compose(changhee_gf, TruncSeries.from_coeffs([0, -4], order))
print("Changhee GF at -4t", [int(c) for c in substituted.coeffs])

assert substituted.coeffs == tuple(closed)

# %%
# Coefficients of sqrt(1 + t) are the half-integer binomials.
root = series_sqrt(TruncSeries.from_coeffs([1, 1], 6))
print("sqrt(1+t)        ", [str(c) for c in root.coeffs])
assert root[2] == Fraction(-1, 8)
