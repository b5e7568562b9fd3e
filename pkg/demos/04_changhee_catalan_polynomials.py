"""
Changhee and Catalan polynomials
================================

Multiplying the number generating functions by ``(1 + t)^(x/2)`` (or
``(1 - 4t)^(x/2)``) gives polynomial families in ``x``.  Setting ``x = 0``
recovers the numbers.
"""

from fractions import Fraction

from catpadic.numbers import (
    catalan,
    catalan_polynomials,
    changhee_half_polynomials,
    changhee_lambda,
)

ch = changhee_half_polynomials(5)
for n, p in enumerate(ch.members):
    print(f"Ch_{n},1/2(x) = {p}")

cat = catalan_polynomials(5)
for n, p in enumerate(cat.members):
    print(f"C_{n}(x) = {p}")

# %%
# x = 0 gives back the numbers; x = 1 removes the square-root denominator
# from the Catalan generating function.
assert ch.at(0) == changhee_lambda(Fraction(1, 2), 5).values
assert cat.at(0) == tuple(catalan(n) for n in range(6))
print("C_n(1):", [str(v) for v in cat.at(1)])
