from fractions import Fraction
from math import comb, factorial

import pytest
import sympy

from catpadic.algebra import Poly
from catpadic.numbers import (
    catalan,
    catalan_polynomials,
    catalan_via_gf,
    catalan_via_sqrt_quotient,
    changhee_half_polynomials,
    changhee_lambda,
    changhee_polynomials,
    euler_numbers,
    euler_numbers_via_gf,
    euler_polynomials,
    falling_factorial,
    stirling1,
    stirling1_table,
    stirling2,
    stirling2_table,
)

F = Fraction


def brute_falling(n):
    # integer coefficient list of x(x-1)...(x-n+1), plain list convolution
    cs = [1]
    for j in range(n):
        nxt = [0] * (len(cs) + 1)
        for k, c in enumerate(cs):
            nxt[k + 1] += c
            nxt[k] -= j * c
        cs = nxt
    return cs


def s2_explicit(n, k):
    return sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1)) // factorial(k)


def to_fraction(v):
    v = sympy.nsimplify(v)
    return F(int(v.p), int(v.q))


class TestStirling:
    def test_examples(self):
        assert stirling1(3, 1) == 2
        assert stirling1(3, 2) == -3
        assert stirling1(0, 0) == 1
        assert stirling2(3, 2) == 3
        assert stirling2(4, 2) == 7

    @pytest.mark.parametrize("n", range(21))
    def test_diagonal_and_column(self, n):
        assert stirling1(n, n) == 1
        if n >= 1:
            assert stirling2(n, 1) == 1

    def test_out_of_range_zero(self):
        assert stirling1(3, 4) == 0
        assert stirling2(-1, 0) == 0
        assert stirling1(2, -1) == 0
        t = stirling1_table(5)
        assert t(5, 6) == 0 and t(2, -1) == 0
        with pytest.raises(IndexError):
            t(9, 3)

    def test_s1_brute_force(self):
        for n in range(21):
            cs = brute_falling(n)
            assert [stirling1(n, l) for l in range(n + 1)] == cs

    def test_s2_explicit_formula(self):
        for n in range(21):
            for k in range(n + 1):
                assert stirling2(n, k) == s2_explicit(n, k)

    def test_power_in_falling_basis(self):
        for n in range(21):
            total = Poly()
            for l in range(n + 1):
                total = total + falling_factorial(l) * stirling2(n, l)
            assert total == Poly.monomial(n)

    def test_inverse_triangles(self):
        for n in range(21):
            for m in range(21):
                s = sum(stirling1(n, k) * stirling2(k, m) for k in range(21))
                assert s == (1 if n == m else 0)

    def test_signs(self):
        for n in range(21):
            for l in range(n + 1):
                v = stirling1(n, l)
                assert v == 0 or (v > 0) == ((n - l) % 2 == 0)
                assert stirling2(n, l) >= 0

    def test_recurrences_hold_on_table(self):
        s1, s2 = stirling1_table(20), stirling2_table(20)
        for n in range(20):
            for l in range(n + 2):
                assert s1(n + 1, l) == s1(n, l - 1) - n * s1(n, l)
                assert s2(n + 1, l) == l * s2(n, l) + s2(n, l - 1)

    def test_sympy_agrees(self):
        from sympy.functions.combinatorial.numbers import stirling

        for n in range(12):
            for k in range(n + 1):
                assert stirling1(n, k) == stirling(n, k, kind=1, signed=True)
                assert stirling2(n, k) == stirling(n, k, kind=2)


class TestFallingFactorial:
    def test_examples(self):
        assert falling_factorial(0) == Poly([1])
        assert falling_factorial(2) == Poly([0, -1, 1])
        assert falling_factorial(3) == Poly([0, 2, -3, 1])


class TestEuler:
    def test_small(self):
        e = euler_numbers(3)
        assert e.values == (1, F(-1, 2), 0, F(1, 4))

    def test_two_paths_agree(self):
        assert euler_numbers(64).values == euler_numbers_via_gf(64).values

    def test_even_vanish(self):
        e = euler_numbers(30)
        assert all(e[2 * k] == 0 for k in range(1, 16))

    def test_sympy_convention(self):
        e = euler_numbers(25)
        for n in range(26):
            assert e[n] == to_fraction(sympy.euler(n, sympy.Integer(0)))

    def test_polynomials(self):
        fam = euler_polynomials(12)
        assert fam[0] == Poly([1])
        assert fam[1] == Poly([F(-1, 2), 1])
        assert fam[2] == Poly([0, -1, 1])
        x = sympy.Symbol("x")
        for n in range(13):
            ref = sympy.Poly(sympy.euler(n, x), x).all_coeffs()[::-1]
            assert list(fam[n].coeffs) == [to_fraction(c) for c in ref]
        e = euler_numbers(12)
        assert fam.at(0) == e.values


class TestCatalan:
    def test_values(self):
        assert [catalan(n) for n in range(5)] == [1, 1, 2, 5, 14]
        assert catalan(10) == 16796

    def test_gf_paths(self):
        closed = tuple(catalan(n) for n in range(65))
        assert catalan_via_gf(64).values == closed
        assert catalan_via_sqrt_quotient(64).values == closed
        assert catalan_via_gf(0).values == (1,)

    def test_positive_integers(self):
        assert all(catalan(n).denominator == 1 and catalan(n) > 0 for n in range(65))


class TestChanghee:
    def test_half_small(self):
        ch = changhee_lambda(F(1, 2), 2)
        assert ch.values == (1, F(-1, 4), F(1, 4))

    def test_lambda_one(self):
        assert changhee_lambda(1, 0).values == (1,)
        # lambda = 1: 2/(2+t) gives (-1)^n n! / 2^n
        ch = changhee_lambda(1, 10)
        assert ch.values == tuple(F((-1) ** n * factorial(n), 2**n) for n in range(11))

    def test_half_polynomials(self):
        fam = changhee_half_polynomials(10)
        assert fam[0] == Poly([1])
        assert fam[1] == Poly([F(-1, 4), F(1, 2)])
        assert fam.at(0) == changhee_lambda(F(1, 2), 10).values

    def test_polynomials_specialize(self):
        for lam in (F(1, 3), F(2), F(-1)):
            assert changhee_polynomials(lam, 8).at(0) == changhee_lambda(lam, 8).values

    def test_polynomial_degree(self):
        fam = changhee_half_polynomials(15)
        assert all(p.degree <= n for n, p in enumerate(fam.members))


class TestCatalanPolynomials:
    def test_small(self):
        fam = catalan_polynomials(5)
        assert fam[0] == Poly([1])
        assert fam[1] == Poly([1, -2])

    def test_specialize(self):
        fam = catalan_polynomials(25)
        assert fam.at(0) == tuple(catalan(n) for n in range(26))
        assert all(p.degree <= n for n, p in enumerate(fam.members))

    def test_integer_x(self):
        # x = 1: 2 sqrt(1-4t) / (1 + sqrt(1-4t)) = 2 - (Catalan GF), via sympy series
        t = sympy.Symbol("t")
        expr = 2 * sympy.sqrt(1 - 4 * t) / (1 + sympy.sqrt(1 - 4 * t))
        ser = sympy.series(expr, t, 0, 9).removeO()
        fam = catalan_polynomials(8)
        for n in range(9):
            assert fam[n](F(1)) == to_fraction(ser.coeff(t, n))
