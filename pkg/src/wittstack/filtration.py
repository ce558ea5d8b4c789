"""Ramification filtrations stored by group orders.

A :class:`Filtration` records ``|G_0|, |G_1|, ...`` for the lower numbering
(trailing ones dropped) together with the tame order ``r``.  Everything
downstream (Herbrand functions, Riemann-Hurwitz) only consumes orders.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .base.plfunc import PLFunction, pl_eval
from .errors import DomainError, NonIntegralLowerJump


def p_part(n: int, p: int) -> int:
    if p < 2:
        return 1
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _is_p_power(n: int, p: int) -> bool:
    if n < 1:
        return False
    return n == 1 or (p >= 2 and p_part(n, p) == n)


@dataclass(frozen=True)
class Filtration:
    orders: tuple[int, ...]
    r: int
    p: int

    def __init__(self, orders: Sequence[int], r: int | None = None, p: int = 0):
        ords = [int(v) for v in orders]
        if not ords or any(v < 1 for v in ords):
            raise DomainError("orders must be positive and nonempty")
        if any(b > a for a, b in zip(ords, ords[1:])):
            raise DomainError("orders must be non-increasing")
        while len(ords) > 1 and ords[-1] == 1:
            ords.pop()
        if r is None:
            r = ords[0] // p_part(ords[0], p)
        object.__setattr__(self, "orders", tuple(ords))
        object.__setattr__(self, "r", int(r))
        object.__setattr__(self, "p", int(p))

    @classmethod
    def tame(cls, e: int, p: int = 0) -> Filtration:
        return cls([e, 1], e, p)

    def order(self, i: int) -> int:
        return self.orders[i] if i < len(self.orders) else 1

    @property
    def stab_order(self) -> int:
        return self.orders[0]

    @property
    def is_tame(self) -> bool:
        return self.order(1) == 1

    @property
    def lower_jumps(self) -> list[int]:
        return [i for i in range(1, len(self.orders)) if self.order(i) > self.order(i + 1)]

    def ramification_sum(self) -> int:
        """``sum_{i >= 0} (|G_i| - 1)`` by direct iteration."""
        return sum(v - 1 for v in self.orders)

    def upper_jumps(self) -> list[Fraction]:
        phi = phi_from_filtration(self)
        return [pl_eval(phi, j) for j in self.lower_jumps]

    def to_json(self):
        return {"orders": list(self.orders) + [1], "r": self.r}


def phi_from_filtration(f: Filtration) -> PLFunction:
    """Herbrand function: slope ``|G_(i+1)| / |G_0|`` on ``[i, i+1]``."""
    g0 = f.orders[0]
    last = len(f.orders)
    bps = list(range(last))
    slopes = [Fraction(f.order(i + 1), g0) for i in range(last)]
    return PLFunction(tuple(Fraction(b) for b in bps), tuple(slopes), Fraction(0))


def _check_increasing(seq, what):
    if any(v <= 0 for v in seq):
        raise DomainError(f"{what} jumps must be positive")
    if any(b <= a for a, b in zip(seq, seq[1:])):
        raise DomainError(f"{what} jumps must be strictly increasing")


def lower_to_upper(lower: Sequence, r: int, p: int) -> list[Fraction]:
    """Herbrand translation ``u_k - u_(k-1) = (m_k - m_(k-1)) / (p^(k-1) r)``."""
    lower = [Fraction(v) for v in lower]
    _check_increasing(lower, "lower")
    out, u, m = [], Fraction(0), Fraction(0)
    for k, mk in enumerate(lower, start=1):
        u += (mk - m) / (p ** (k - 1) * r)
        m = mk
        out.append(u)
    return out


def upper_to_lower(upper: Sequence, r: int, p: int) -> list[Fraction]:
    """Inverse of :func:`lower_to_upper`."""
    upper = [Fraction(v) for v in upper]
    _check_increasing(upper, "upper")
    out, u, m = [], Fraction(0), Fraction(0)
    for k, uk in enumerate(upper, start=1):
        m += (uk - u) * p ** (k - 1) * r
        u = uk
        out.append(m)
    return out


def filtration_from_upper(upper: Sequence, r: int, p: int) -> Filtration:
    """Assemble the orders of a cyclic-p-power-by-tame filtration.

    Zero entries mark levels without ramification and are skipped; the
    wild part then has order ``p^k`` with ``k`` the number of positive
    jumps.
    """
    ups = [Fraction(v) for v in upper if Fraction(v) != 0]
    if any(v < 0 for v in ups):
        raise DomainError("upper jumps must be nonnegative")
    if not ups:
        return Filtration([r, 1], r, p)
    lows = upper_to_lower(ups, r, p)
    if any(v.denominator != 1 for v in lows):
        raise NonIntegralLowerJump(f"upper jumps {upper} give lower jumps {lows}")
    return filtration_from_lower([int(v) for v in lows], r, p)


def filtration_from_lower(lower: Sequence[int], r: int, p: int) -> Filtration:
    """Cyclic-by-tame filtration with the given integer lower jumps.

    ``|G_0| = r p^k``, ``|G_i| = p^k`` for ``1 <= i <= l_1`` and
    ``|G_i| = p^(k-j)`` for ``l_j < i <= l_(j+1)``.
    """
    lows = [int(v) for v in lower]
    _check_increasing(lows, "lower")
    k = len(lows)
    if k == 0:
        return Filtration([r, 1], r, p)
    orders = [r * p ** k] + [p ** k] * lows[0]
    for j in range(1, k):
        orders += [p ** (k - j)] * (lows[j] - lows[j - 1])
    return Filtration(orders + [1], r, p)


def validate_filtration(f: Filtration) -> list[str]:
    """Order-level checks of the structural constraints on a filtration.

    Returns the violated clauses, each tagged ``(a/c)``, ``(b)``, ``(d)``,
    ``(e)`` or ``(f)``; empty when all hold.  Upper-jump congruence is only
    checked when every upper jump is an integer.
    """
    out = []
    p = f.p
    g0, g1 = f.order(0), f.order(1)
    if g1 != p_part(g0, p):
        out.append(f"(a/c) |G_1| = {g1} is not the p-part {p_part(g0, p)} of |G_0| = {g0}")
    if g0 % g1 or g0 // g1 != f.r:
        out.append(f"(b) |G_0|/|G_1| = {Fraction(g0, g1)} but r = {f.r}")
    for i in range(1, len(f.orders)):
        a, b = f.order(i), f.order(i + 1)
        if a % b or not _is_p_power(a // b, p):
            out.append(f"(d) |G_{i}|/|G_{i + 1}| = {Fraction(a, b)} is not a power of p")
    lows = f.lower_jumps
    if f.r > 1 and any((a - lows[0]) % f.r for a in lows):
        out.append(f"(e) lower jumps {lows} not congruent mod {f.r}")
    ups = f.upper_jumps()
    if f.r > 1 and all(u.denominator == 1 for u in ups):
        if any((u - ups[0]) % f.r for u in ups):
            out.append(f"(f) upper jumps {[str(u) for u in ups]} not congruent mod {f.r}")
    return out
