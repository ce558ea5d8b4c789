from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittstack.base import Place, RatFunc
from wittstack.base.parse import parse_ratfunc
from wittstack.cover import (CoverSpec, analyze_cover, asw_h0_direct, asw_h0_simplified,
                             branch_places, quotient_report, simplification_note)
from wittstack.errors import CapExceeded, DomainError, IrrationalBranchPoint


def spec(p, *comps, hint=None):
    return CoverSpec(p, len(comps), tuple(parse_ratfunc(c, p) for c in comps), hint)


def jump_data(an):
    return sorted((b.upper_jumps, b.filtration.stab_order) for b in an.branch)


def test_branch_places():
    assert branch_places(spec(3, "x^-2", "0")) == [Place.finite(0)]
    assert branch_places(spec(3, "1/(x*(x-1))", "0")) == [Place.finite(0), Place.finite(1)]
    assert branch_places(spec(3, "x", "0")) == [Place.infinity()]
    with pytest.raises(IrrationalBranchPoint):
        branch_places(spec(3, "1/(x^2+1)", "0"))


@pytest.mark.parametrize("p,j", [(2, 1), (2, 3), (3, 2), (5, 4)])
def test_key_shape(p, j):
    an = analyze_cover(spec(p, f"x^-{j}", "0"))
    (b,) = an.branch
    assert b.upper_jumps == [j, p * j] and b.filtration.stab_order == p * p
    assert an.curve.coarse_genus == 0


def test_p_divisible_pole_reduces():
    an = analyze_cover(spec(3, "x^-3", "0"))
    assert an.branch[0].upper_jumps == [1, 3]
    assert any("removed" in s for s in an.notes)


def test_pole_at_infinity_matches_flipped():
    a = analyze_cover(spec(3, "x^4 + x^2 + 1"))
    b = analyze_cover(spec(3, "x^-4 + x^-2 + 1"))
    assert a.branch[0].place == Place.infinity() and b.branch[0].place == Place.finite(0)
    assert jump_data(a) == jump_data(b) == [([4], 3)]


def test_unramified_pole():
    # x^-3 - x^-1 is F(x^-1) - x^-1
    an = analyze_cover(spec(3, "x^-3 - x^-1 + 1/(x-1)"))
    assert [b.place for b in an.branch] == [Place.finite(1)]
    assert any("unramified" in s for s in an.notes)


@given(st.sampled_from([2, 3]), st.integers(0, 2))
def test_coordinate_invariance(p, c):
    base = ["1/(x*(x-1))", "x^-1"]
    an = analyze_cover(spec(p, *base))
    shifted = analyze_cover(CoverSpec(p, 2, tuple(parse_ratfunc(f, p).shift(c) for f in base)))
    flipped = analyze_cover(CoverSpec(p, 2, tuple(parse_ratfunc(f, p).invert_variable() for f in base)))
    assert jump_data(an) == jump_data(shifted) == jump_data(flipped)


def test_n1_canonical():
    for p, m in [(3, 1), (3, 2), (5, 3)]:
        rep = quotient_report(spec(p, f"x^-{m}"))
        assert rep["K"].coeff("Q_0") == (m + 1) * (p - 1)
        assert rep["K"].weight("Q_0") == p
        assert rep["comparison"] is None


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (3, 2), (5, 2)])
def test_report_against_reference_example(p, m):
    rep = quotient_report(spec(p, f"x^-{m}", "0"))
    cmp = rep["comparison"]
    assert cmp["derived_lower_jumps"] == [m, m * (p * p - p + 1)]
    assert cmp["reference_lower_jumps"] == [m, m * (p * p + 1)]
    assert cmp["agree"] is False
    want = -2 + Fraction((m + 1) * (p * p - 1) + m * p * (p - 1) ** 2, p * p)
    assert rep["degree"] == want == 2 * rep["genus"] - 2
    assert cmp["reference_curve_genus"] == cmp["reference_genus"]


def test_simplification_note():
    assert asw_h0_direct(3, 1, 2) == 4
    assert asw_h0_simplified(3, 1, 2) == 3
    assert simplification_note(3, 1, 2) == "p=3 m=1 n=2: direct 4, simplified 3 (differ by 1)"


def test_spec_invariants():
    with pytest.raises(DomainError):
        spec(3, "0", "0")
    with pytest.raises(DomainError):
        CoverSpec(3, 2, (parse_ratfunc("x", 3),))
    with pytest.raises(CapExceeded):
        spec(11, "x^-1")
    with pytest.raises(DomainError):
        CoverSpec(3, 1, (RatFunc.x(5),))
