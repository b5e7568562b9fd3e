from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catpadic.algebra import (
    BadConstantTerm,
    NonUnitDivisor,
    NonzeroInnerConstant,
    Poly,
    TruncSeries,
    binomial_series,
    egf_to_ogf,
    exp_series,
    expm1_series,
    log_series,
    ogf_to_egf,
    series_compose,
    series_div,
    series_mul,
    series_pow,
    series_sqrt,
)
from catpadic.numbers import catalan, stirling1

F = Fraction


def S(coeffs, order):
    return TruncSeries.from_coeffs(coeffs, order)


fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def series(draw, min_order=0, max_order=7, unit=False, constant=None):
    order = draw(st.integers(min_order, max_order))
    cs = draw(st.lists(fractions, min_size=order + 1, max_size=order + 1))
    if constant is not None:
        cs[0] = Fraction(constant)
    elif unit and cs[0] == 0:
        cs[0] = Fraction(1)
    return TruncSeries(cs)


class TestPoly:
    def test_canonical_zero(self):
        assert Poly([0, 0]).coeffs == ()
        assert Poly().degree == -1

    def test_arith(self):
        x = Poly.x()
        assert (x + 1) * (x - 1) == Poly([-1, 0, 1])
        assert (x - 1) ** 3 == Poly([-1, 3, -3, 1])
        assert 2 - x == Poly([2, -1])
        assert (x * 3) / 6 == Poly([0, F(1, 2)])

    def test_eval_and_shift(self):
        f = Poly([1, 2, 3])
        assert f(F(2)) == 17
        assert f.shift(1) == Poly([6, 8, 3])
        assert f.shift(1)(F(5)) == f(F(6))
        assert f.scale_x(F(1, 2)) == Poly([1, 1, F(3, 4)])

    def test_str(self):
        assert str(Poly([F(-1, 4), F(1, 2)])) == "1/2*x - 1/4"
        assert str(Poly()) == "0"
        assert str(Poly([0, -1])) == "-x"

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Poly([0.5])

    @given(st.lists(fractions, min_size=1, max_size=5), st.lists(fractions, min_size=1, max_size=5))
    def test_degree_additive(self, a, b):
        p, q = Poly(a), Poly(b)
        if not p.is_zero() and not q.is_zero():
            assert (p * q).degree == p.degree + q.degree


class TestSeriesMul:
    def test_difference_of_squares(self):
        assert series_mul(S([1, 1], 2), S([1, -1], 2)) == S([1, 0, -1], 2)

    def test_identity(self):
        a = S([3, F(1, 2), -7, 2], 3)
        assert series_mul(a, S([1], 3)) == a
        assert series_mul(a, S([1], 2)) == a.truncate(2)

    def test_catalan_times_one_plus_sqrt(self):
        # sqrt(1 - 4t) coefficient n from the closed form -C(2n,n)/(2n-1)
        root = TruncSeries([F(-comb(2 * n, n), 2 * n - 1) for n in range(5)])
        cat = TruncSeries([catalan(n) for n in range(5)])
        assert series_mul(cat, root + 1) == S([2], 4)

    def test_mixed_orders_truncate(self):
        assert (S([1, 1], 5) * S([1, 1], 2)).order == 2
        assert (S([1, 1], 5) + S([1, 1], 2)).order == 2

    def test_poly_coefficients(self):
        x = Poly.x()
        a = TruncSeries([Poly([1]), x])
        b = TruncSeries([F(1), F(2)])
        assert series_mul(a, b) == TruncSeries([Poly([1]), x + 2])


class TestSeriesDiv:
    def test_geometric(self):
        assert series_div(S([1], 3), S([1, 1], 3)) == S([1, -1, 1, -1], 3)

    def test_changhee_half_gf(self):
        root = series_sqrt(S([1, 1], 2))
        assert series_div(S([2], 2), root + 1) == S([1, F(-1, 4), F(1, 8)], 2)

    def test_self_quotient(self):
        a = S([F(3, 2), 5, -1, 4], 3)
        assert series_div(a, a) == S([1], 3)

    def test_non_unit(self):
        with pytest.raises(NonUnitDivisor):
            series_div(S([1], 2), S([0, 1], 2))
        with pytest.raises(NonUnitDivisor):
            series_div(S([1], 1), TruncSeries([Poly.x(), Poly([1])]))

    def test_poly_constant_divisor(self):
        q = series_div(TruncSeries([Poly.x(), Poly([0])]), TruncSeries([Poly([2]), Poly([1])]))
        assert q == TruncSeries([Poly([0, F(1, 2)]), Poly([0, F(-1, 4)])])


class TestBinomialSeries:
    def test_half(self):
        assert binomial_series(F(1, 2), 3) == S([1, F(1, 2), F(-1, 8), F(1, 16)], 3)

    def test_integer_terminates(self):
        assert binomial_series(2, 3) == S([1, 2, 1, 0], 3)

    def test_zero_power(self):
        assert binomial_series(0, 4) == S([1], 4)

    def test_half_closed_form(self):
        b = binomial_series(F(1, 2), 30)
        for n in range(1, 31):
            assert b[n] == F(comb(2 * n, n) * (-1) ** (n - 1), 4**n * (2 * n - 1))

    @given(fractions, fractions)
    @settings(max_examples=40)
    def test_exponent_law(self, l1, l2):
        n = 8
        assert binomial_series(l1 + l2, n) == series_mul(binomial_series(l1, n), binomial_series(l2, n))


class TestSqrt:
    def test_matches_binomial(self):
        assert series_sqrt(S([1, 1], 4)) == binomial_series(F(1, 2), 4)

    def test_one(self):
        assert series_sqrt(S([1], 3)) == S([1], 3)

    def test_one_minus_4t(self):
        assert series_sqrt(S([1, -4], 3)) == S([1, -2, -2, -4], 3)

    def test_bad_constant(self):
        with pytest.raises(BadConstantTerm):
            series_sqrt(S([4, 1], 3))

    @given(series(constant=1))
    def test_square_roundtrip(self, a):
        r = series_sqrt(a)
        assert r[0] == 1
        assert series_mul(r, r) == a


class TestCompose:
    def test_geometric_scaling(self):
        geo = S([1, 1, 1], 2)
        assert series_compose(geo, S([0, 2], 2)) == S([1, 2, 4], 2)

    def test_identity_inner(self):
        a = S([F(1, 3), -2, 5, F(7, 2)], 3)
        assert series_compose(a, TruncSeries.t(3)) == a

    def test_nonzero_inner(self):
        with pytest.raises(NonzeroInnerConstant):
            series_compose(S([1, 1], 2), S([1, 1], 2))

    def test_catalan_from_changhee_gf(self):
        order = 10
        ch = series_div(S([2], order), series_sqrt(S([1, 1], order)) + 1)
        via_sub = series_compose(ch, S([0, -4], order))
        cat = series_div(S([2], order), series_sqrt(S([1, -4], order)) + 1)
        assert via_sub == cat

    def test_exp_log_inverse(self):
        assert series_compose(expm1_series(12), log_series(12)) == TruncSeries.t(12)
        assert series_compose(log_series(12), expm1_series(12)) == TruncSeries.t(12)

    @given(series(max_order=5), series(max_order=5, constant=0), series(max_order=5, constant=0))
    @settings(max_examples=30)
    def test_associative(self, a, b, c):
        assert series_compose(series_compose(a, b), c) == series_compose(a, series_compose(b, c))


class TestElementary:
    def test_log(self):
        assert log_series(3) == S([0, 1, F(-1, 2), F(1, 3)], 3)

    def test_exp(self):
        assert exp_series(3) == S([1, 1, F(1, 2), F(1, 6)], 3)
        assert expm1_series(3) == exp_series(3) - 1

    @pytest.mark.parametrize("m", range(0, 8))
    def test_log_power_is_stirling1(self, m):
        order = 14
        power = series_pow(log_series(order), m)
        for n in range(order + 1):
            assert power[n] == F(factorial(m)) * stirling1(n, m) / factorial(n)

    def test_egf_roundtrip(self):
        vals = [F(1), F(-1, 4), F(1, 4), F(-15, 32)]
        assert ogf_to_egf(egf_to_ogf(vals)) == vals


class TestRingLaws:
    @given(series(), series(), series())
    @settings(max_examples=50)
    def test_mul_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @given(series(), series(), series())
    @settings(max_examples=50)
    def test_distributive(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @given(series(), series())
    def test_commutative(self, a, b):
        assert a * b == b * a

    @given(series(), series(unit=True))
    def test_div_roundtrip(self, a, b):
        q = series_div(a, b)
        n = min(a.order, b.order)
        assert series_mul(q, b) == a.truncate(n)
