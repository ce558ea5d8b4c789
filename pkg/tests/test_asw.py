
import pytest
from hypothesis import given, strategies as st

from wittstack.asw import (as_lower_jump_oracle, asw_reduce, is_admissible,
                           jumps_from_pole_orders, local_witt, upper_jumps)
from wittstack.base import LaurentSeries
from wittstack.errors import MismatchedRing, PrecisionExhausted
from wittstack.witt import WittVector, witt_add, wp


def vec(p, *comps):
    return local_witt(p, [LaurentSeries.from_dict(p, c) for c in comps])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_key_example(p):
    for j in range(1, 21):
        if j % p:
            assert upper_jumps(vec(p, {-j: 1}, {})) == [j, p * j]


def test_reduction_of_p_divisible_pole():
    red = asw_reduce(vec(2, {-2: 1}))
    assert red.witt[0] == LaurentSeries.monomial(2, -1)
    assert red.pole_orders == [1]
    # (t^-9 + t^-1, 0) = (t^-9, 0) + (t^-1, 0) + (0, t^-19 + t^-11): the carry survives
    red = asw_reduce(vec(3, {-9: 1, -1: 1}, {}))
    assert red.pole_orders == [1, 19]
    assert upper_jumps(vec(3, {-9: 1, -1: 1}, {})) == [1, 19]
    assert upper_jumps(vec(3, {-9: 1}, {})) == [1, 3]


def test_second_component_dominates():
    # level-1 jump is max(p*m0, m1)
    assert upper_jumps(vec(3, {-1: 1}, {-5: 1})) == [1, 5]
    assert upper_jumps(vec(3, {}, {-2: 1})) == [0, 2]


def test_jumps_formula():
    assert jumps_from_pole_orders([0, 0], 3) == [0, 0]
    assert jumps_from_pole_orders([2, 1, 20], 3) == [2, 6, 20]


def test_admissible():
    assert is_admissible([1, 2, 4], 2)
    assert not is_admissible([1, 2, 6], 2)
    assert is_admissible([1, 3, 9], 3)
    assert is_admissible([1, 4], 3)
    assert not is_admissible([3, 9], 3)
    assert not is_admissible([1, 2], 3)
    assert not is_admissible([1, 6], 3)


@pytest.mark.parametrize("p,m", [(2, 1), (2, 3), (2, 5), (3, 1), (3, 2), (3, 4), (5, 3)])
def test_galois_oracle(p, m):
    assert as_lower_jump_oracle(p, m) == m == upper_jumps(vec(p, {-m: 1}))[0]


@given(st.sampled_from([(2, 2), (3, 2), (2, 3)]), st.randoms(use_true_random=False))
def test_gauge_invariance(shape, rnd):
    p, n = shape

    def rand(maxpole):
        return {-e: rnd.randrange(1, p) for e in range(1, maxpole + 1) if rnd.random() < 0.5}

    x = vec(p, *[rand(4) for _ in range(n)])
    b = vec(p, *[rand(2) for _ in range(n)])
    assert upper_jumps(witt_add(x, wp(b))) == upper_jumps(x)


def test_unknown_polar_part():
    with pytest.raises(PrecisionExhausted):
        local_witt(3, [LaurentSeries(3, 0, [], abs_prec=-2)])
    # known leading term, but a p-divisible pole hides behind the precision
    x = local_witt(3, [LaurentSeries(3, -6, [1], abs_prec=-4)])
    with pytest.raises(PrecisionExhausted):
        asw_reduce(x)


def test_needs_laurent():
    with pytest.raises(MismatchedRing):
        asw_reduce(WittVector(2, [1, 0]))
