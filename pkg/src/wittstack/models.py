"""Named stacky curves used by the self-test, the shipped JSON files and the docs."""
from __future__ import annotations

from .base.poly import Place
from .cover import asw_quotient_curve
from .filtration import Filtration
from .stacky import StackyCurveData, StackyPoint


def p23_log(p: int = 5) -> StackyCurveData:
    """Weighted line P(2,3): points of order 3 and 2 plus a cusp, with log structure."""
    pts = (
        StackyPoint("P", Place.finite(0), Filtration.tame(3, p)),
        StackyPoint("Q", Place.finite(1), Filtration.tame(2, p)),
        StackyPoint("C", Place.infinity(), Filtration.tame(1, p)),
    )
    return StackyCurveData(p, 0, pts, ("C",))


def xp_char3(ell: int) -> StackyCurveData:
    """X(ell)/PSL_2(F_ell) in characteristic 3.

    A tame point of order ``ell`` and a wild point with filtration
    ``(6, 3, 1)`` (inertia S_3, tame part 2).
    """
    pts = (
        StackyPoint("P", Place.finite(1), Filtration.tame(ell, 3)),
        StackyPoint("Q", Place.finite(0), Filtration([6, 3, 1], 2, 3)),
    )
    return StackyCurveData(3, 0, pts, ())


def asw_p3_m1() -> StackyCurveData:
    """Quotient of the Z/9 example with m = 1 and the reference lower jumps (1, 10)."""
    return asw_quotient_curve(3, 1)


NAMED = {
    "p23_log": p23_log,
    "asw_p3_m1": asw_p3_m1,
    "xp7_char3": lambda: xp_char3(7),
    "xp11_char3": lambda: xp_char3(11),
}
