from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittstack.base import pl_eval, pl_invert
from wittstack.errors import DomainError, NonIntegralLowerJump
from wittstack.filtration import (Filtration, filtration_from_lower, filtration_from_upper,
                                  lower_to_upper, phi_from_filtration, upper_to_lower,
                                  validate_filtration)

F = Fraction


def test_upper_to_lower_known():
    assert upper_to_lower([2, 6], 1, 3) == [2, 14]
    assert upper_to_lower([1, 3], 1, 3) == [1, 7]
    assert lower_to_upper([1, 10], 1, 3) == [1, 4]


def test_from_upper_with_tame_part():
    assert filtration_from_upper([1], 2, 3).orders == (6, 3, 3)
    assert filtration_from_upper(["1/2"], 2, 3).orders == (6, 3)
    with pytest.raises(NonIntegralLowerJump):
        filtration_from_upper(["1/3"], 2, 3)


def test_from_lower_orders():
    f = filtration_from_lower([1, 10], 1, 3)
    assert f.orders == (9, 9) + (3,) * 9
    assert f.lower_jumps == [1, 10]
    assert f.ramification_sum() == 8 + 8 + 9 * 2
    assert f.upper_jumps() == [1, 4]


def test_trailing_ones_and_tame():
    assert Filtration([5, 1, 1]).orders == (5,)
    t = Filtration.tame(7, 3)
    assert t.is_tame and t.stab_order == 7 and t.lower_jumps == []


def test_phi_slopes():
    phi = phi_from_filtration(Filtration([6, 3, 3], 2, 3))
    assert phi.slopes == (F(1, 2), F(1, 6))
    assert pl_eval(phi, 2) == 1


@given(st.sampled_from([(2, 1), (3, 1), (3, 2), (5, 2), (2, 3)]),
       st.lists(st.integers(1, 12), min_size=1, max_size=3, unique=True))
def test_roundtrip(pr, lows):
    p, r = pr
    lows = sorted(lows)
    ups = lower_to_upper(lows, r, p)
    assert upper_to_lower(ups, r, p) == lows
    f = filtration_from_lower(lows, r, p)
    phi = phi_from_filtration(f)
    assert [pl_eval(phi, m) for m in lows] == ups
    psi = pl_invert(phi)
    assert [pl_eval(psi, u) for u in ups] == lows


def test_validation_clauses():
    assert validate_filtration(filtration_from_lower([1, 3], 2, 3)) == []
    bad = Filtration([6, 2], 3, 3)
    msgs = validate_filtration(bad)
    assert any(m.startswith("(a/c)") for m in msgs)
    assert any(m.startswith("(e)") for m in validate_filtration(filtration_from_lower([1, 2], 2, 3)))


def test_input_checks():
    with pytest.raises(DomainError):
        upper_to_lower([2, 2], 1, 3)
    with pytest.raises(DomainError):
        Filtration([1, 2])
    with pytest.raises(DomainError):
        Filtration([])
