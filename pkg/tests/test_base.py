from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittstack.base import (FpElem, LaurentSeries, Place, Poly, RatFunc, inv_mod, is_prime,
                            laurent_expand, pl_eval, pl_from_points, pl_invert, rational_roots,
                            valuation)
from wittstack.base.laurent import INF
from wittstack.base.parse import parse_ratfunc, split_components
from wittstack.base.plfunc import PLFunction
from wittstack.errors import DomainError, InternalPrecision, NotPrime, ParseError

primes = st.sampled_from([2, 3, 5, 7])


def test_primes():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(NotPrime):
        FpElem(1, 4)


@given(primes, st.integers(1, 1000))
def test_inverse_mod_p(p, a):
    if a % p:
        assert a * inv_mod(a, p) % p == 1
        assert FpElem(a, p) * FpElem(a, p).inverse() == FpElem(1, p)


def test_fp_arith():
    a = FpElem(3, 5)
    assert a + 4 == FpElem(2, 5)
    assert a ** 4 == FpElem(1, 5)
    assert 1 / a == FpElem(2, 5)


def test_poly_divmod_and_gcd():
    p = 3
    x = Poly.x(p)
    f = (x - 1) * (x + 1) * x
    q, r = divmod(f, x - 1)
    assert r.is_zero() and q == (x + 1) * x
    assert f.gcd((x - 1) ** 2) == x - 1


@given(primes, st.lists(st.integers(0, 6), max_size=6), st.lists(st.integers(0, 6), max_size=6),
       st.integers(0, 6))
def test_poly_shift_and_eval(p, a, b, c):
    f, g = Poly(a, p), Poly(b, p)
    assert (f * g)(c) == f(c) * g(c) % p
    assert f.shift(c)(0) == f(c)


def test_large_product_uses_kernel_consistently():
    p = 7
    a = Poly(list(range(1, 40)), p)
    b = Poly(list(range(3, 50)), p)
    naive = [0] * (len(a.c) + len(b.c) - 1)
    for i, u in enumerate(a.c):
        for j, v in enumerate(b.c):
            naive[i + j] = (naive[i + j] + u * v) % p
    assert (a * b) == Poly(naive, p)


def test_rational_roots_and_cofactor():
    p = 3
    f = parse_ratfunc("x^2*(x-1)*(x^2+1)", p).num
    roots, rest = rational_roots(f)
    assert roots == {0: 2, 1: 1}
    assert rest == parse_ratfunc("x^2+1", p).num


def test_ratfunc_lowest_terms_and_valuation():
    p = 5
    f = parse_ratfunc("(x^2-1)/(x-1)", p)
    assert f == parse_ratfunc("x+1", p)
    g = parse_ratfunc("1/x^3 + x", p)
    assert valuation(g, Place.finite(0)) == -3
    assert valuation(g, Place.infinity()) == -1
    assert valuation(RatFunc.from_int(0, p), Place.finite(0)) == INF


def test_place_order_and_json():
    places = [Place.infinity(), Place.finite(2), Place.finite(0)]
    assert sorted(places, key=Place.sort_key) == [Place.finite(0), Place.finite(2), Place.infinity()]
    for pl in places:
        assert Place.from_json(pl.to_json()) == pl


def test_parser_forms():
    p = 3
    assert parse_ratfunc("2x^2 - x + 1", p) == parse_ratfunc("2*x^2+2*x+1", p)
    assert parse_ratfunc("x^-2", p) == parse_ratfunc("1/x^2", p)
    assert parse_ratfunc("t^-1 + t", p, var="t") == parse_ratfunc("(x^2+1)/x", p)
    with pytest.raises(ParseError):
        parse_ratfunc("x +", p)
    with pytest.raises(ParseError):
        parse_ratfunc("y", p)
    assert split_components("(1/x^2, 0)") == ["1/x^2", "0"]
    assert split_components("x^-1,(x+1)/(x-1),0") == ["x^-1", "(x+1)/(x-1)", "0"]


class TestLaurent:
    p = 3

    def test_product_precision(self):
        a = LaurentSeries(self.p, -1, [1, 1], abs_prec=4)
        b = LaurentSeries(self.p, 2, [1], abs_prec=6)
        c = a * b
        assert c.abs_prec == min(4 + 2, 6 - 1)
        assert c.coefficient(1) == 1

    def test_coefficient_beyond_precision(self):
        a = LaurentSeries(self.p, 0, [1], abs_prec=3)
        with pytest.raises(InternalPrecision):
            a.coefficient(3)

    def test_inverse(self):
        one_minus_t = LaurentSeries.from_dict(self.p, {0: 1, 1: -1})
        inv = one_minus_t.inverse(10)
        assert all(inv.coefficient(k) == 1 for k in range(10))
        assert (inv * one_minus_t).agrees_with(LaurentSeries.one(self.p))

    def test_frobenius_is_pth_power(self):
        a = LaurentSeries.from_dict(self.p, {-2: 1, 1: 2, 3: 1})
        assert a.frobenius() == a ** 3

    def test_str(self):
        assert str(LaurentSeries(self.p, -1, [1], abs_prec=5)) == "t^-1 + O(t^5)"

    def test_expand_at_finite_and_infinity(self):
        p = 5
        f = parse_ratfunc("1/(x*(x-1))", p)
        s = laurent_expand(f, Place.finite(0), 6)
        # 1/(x(x-1)) = -1/x * (1 + x + x^2 + ...)
        assert s.valuation == -1
        assert all(s.coefficient(k) == p - 1 for k in range(-1, 5))
        g = parse_ratfunc("x^3 + x", p)
        at_inf = laurent_expand(g, Place.infinity(), 4)
        assert at_inf.is_exact and at_inf.polar_part() == {-3: 1, -1: 1}

    @given(st.dictionaries(st.integers(-5, 5), st.integers(1, 2), max_size=4),
           st.dictionaries(st.integers(-5, 5), st.integers(1, 2), max_size=4))
    def test_ring_axioms_exact(self, da, db):
        a, b = LaurentSeries.from_dict(self.p, da), LaurentSeries.from_dict(self.p, db)
        assert a * b == b * a
        assert (a + b) * a == a * a + b * a
        assert (a - b) + b == a


class TestPL:
    def test_eval_invert(self):
        phi = PLFunction((0, 2), (Fraction(1, 2), Fraction(1, 6)))
        assert pl_eval(phi, 2) == 1 and pl_eval(phi, 8) == 2
        psi = pl_invert(phi)
        assert psi.breakpoints == (0, 1) and psi.slopes == (2, 6)
        with pytest.raises(DomainError):
            pl_eval(phi, -1)

    def test_merge_equal_slopes(self):
        a = PLFunction((0, 1, 2), (1, 1, 3))
        assert a == PLFunction((0, 2), (1, 3))

    @given(st.lists(st.fractions(min_value=Fraction(1, 9), max_value=9), min_size=1, max_size=5),
           st.fractions(min_value=0, max_value=20))
    def test_inverse_roundtrip(self, slopes, x):
        phi = PLFunction(tuple(range(len(slopes))), tuple(slopes))
        assert pl_eval(pl_invert(phi), pl_eval(phi, x)) == x

    def test_from_points(self):
        f = pl_from_points([0, 1, 3], [0, 2, 3], Fraction(1, 4))
        assert f.slopes == (2, Fraction(1, 2), Fraction(1, 4))
