"""Continuous increasing piecewise-linear functions with rational data."""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import DomainError


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class PLFunction:
    """Piecewise-linear map on ``[breakpoints[0], inf)``.

    Segment ``k`` starts at ``breakpoints[k]`` and has slope ``slopes[k]``;
    the last slope extends to infinity.  Adjacent segments with equal slope
    are merged so that equal functions compare equal.
    """

    breakpoints: tuple[Fraction, ...]
    slopes: tuple[Fraction, ...]
    value0: Fraction = Fraction(0)

    def __post_init__(self):
        bps = [_q(b) for b in self.breakpoints]
        sl = [_q(s) for s in self.slopes]
        if not bps or len(bps) != len(sl):
            raise DomainError("need one slope per breakpoint")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if any(s <= 0 for s in sl):
            raise DomainError("slopes must be positive")
        mb, ms = [bps[0]], [sl[0]]
        for b, s in zip(bps[1:], sl[1:]):
            if s != ms[-1]:
                mb.append(b)
                ms.append(s)
        object.__setattr__(self, "breakpoints", tuple(mb))
        object.__setattr__(self, "slopes", tuple(ms))
        object.__setattr__(self, "value0", _q(self.value0))

    @classmethod
    def identity(cls) -> PLFunction:
        return cls((Fraction(0),), (Fraction(1),))

    def knot_values(self) -> list[Fraction]:
        vals = [self.value0]
        for k in range(1, len(self.breakpoints)):
            width = self.breakpoints[k] - self.breakpoints[k - 1]
            vals.append(vals[-1] + self.slopes[k - 1] * width)
        return vals

    def __call__(self, x) -> Fraction:
        return pl_eval(self, x)


def pl_eval(phi: PLFunction, x) -> Fraction:
    x = _q(x)
    if x < phi.breakpoints[0]:
        raise DomainError(f"{x} lies left of the domain start {phi.breakpoints[0]}")
    k = bisect_right(phi.breakpoints, x) - 1
    vals = phi.knot_values()
    return vals[k] + phi.slopes[k] * (x - phi.breakpoints[k])


def pl_invert(phi: PLFunction) -> PLFunction:
    """Inverse function; its domain starts at ``phi(breakpoints[0])``."""
    vals = phi.knot_values()
    return PLFunction(tuple(vals), tuple(1 / s for s in phi.slopes), phi.breakpoints[0])


def pl_from_points(xs: Sequence, ys: Sequence, last_slope) -> PLFunction:
    """Interpolating PL function through ``(xs[i], ys[i])`` with a final slope."""
    xs = [_q(x) for x in xs]
    ys = [_q(y) for y in ys]
    slopes = [(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]
    slopes.append(_q(last_slope))
    return PLFunction(tuple(xs), tuple(slopes), ys[0])
