import random

import pytest
from hypothesis import given, strategies as st

from wittstack.base import LaurentSeries
from wittstack.errors import BadLength, CapExceeded, DomainError, MismatchedRing
from wittstack.witt import (WittVector, frobenius, from_zpn, gen_witt_polys, ghost_map,
                            teichmuller_digit, to_zpn, truncate, verschiebung, witt_add,
                            witt_mul, witt_neg, witt_scalar, wp)


def test_first_carry_polynomial_p2():
    s = gen_witt_polys(2, 2, "add")
    assert s.format(1) == "X0*Y0 + X1 + Y1"


def test_small_values():
    one = WittVector(2, [1, 0])
    assert one + one == WittVector(2, [0, 1])
    assert one * one == one
    assert to_zpn(WittVector(2, [0, 1])) == 2


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_zpn_roundtrip(p, n):
    for r in range(p ** n):
        assert to_zpn(from_zpn(r, p, n)) == r


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2)])
def test_ring_hom_random(p, n):
    rng = random.Random(1)
    mod = p ** n
    for _ in range(50):
        a, b = rng.randrange(mod), rng.randrange(mod)
        x, y = from_zpn(a, p, n), from_zpn(b, p, n)
        assert to_zpn(x + y) == (a + b) % mod
        assert to_zpn(x * y) == (a * b) % mod
        assert to_zpn(-x) == (-a) % mod
        assert to_zpn(witt_scalar(5, x)) == (5 * a) % mod


def test_teichmuller():
    for c in range(5):
        t = teichmuller_digit(c, 5, 3)
        assert t % 5 == c and pow(t, 5, 125) == t


@given(st.sampled_from([2, 3]), st.lists(st.integers(-30, 30), min_size=3, max_size=3),
       st.lists(st.integers(-30, 30), min_size=3, max_size=3))
def test_ghost_homomorphism(p, a, b):
    x, y = WittVector.lift(p, a), WittVector.lift(p, b)
    assert ghost_map(x + y) == [u + v for u, v in zip(ghost_map(x), ghost_map(y))]
    assert ghost_map(x * y) == [u * v for u, v in zip(ghost_map(x), ghost_map(y))]


def test_fv_is_p():
    p = 3
    for r in range(27):
        x = from_zpn(r, p, 3)
        assert to_zpn(frobenius(verschiebung(x))) == 3 * r % 27
        assert frobenius(x) == x  # F is the identity on W(F_p)


def test_laurent_frobenius_and_wp():
    p = 3
    x = WittVector(p, [LaurentSeries.monomial(p, -1), LaurentSeries.zero(p)])
    assert frobenius(x)[0] == LaurentSeries.monomial(p, -3)
    assert wp(x) == witt_add(frobenius(x), witt_neg(x))
    assert witt_mul(x, WittVector(p, [LaurentSeries.one(p), LaurentSeries.zero(p)])) == x


def test_errors():
    with pytest.raises(MismatchedRing):
        WittVector(2, [1, 0]) + WittVector(3, [1, 0])
    with pytest.raises(MismatchedRing):
        WittVector(2, [1, LaurentSeries.one(2)])
    with pytest.raises(BadLength):
        truncate(WittVector(2, [1, 0]), 3)
    with pytest.raises(BadLength):
        WittVector(2, [])
    with pytest.raises(CapExceeded):
        gen_witt_polys(11, 2, "add")
    with pytest.raises(DomainError):
        frobenius(WittVector.lift(2, [1, 2]))
    with pytest.raises(DomainError):
        ghost_map(WittVector(2, [1, 0]))
