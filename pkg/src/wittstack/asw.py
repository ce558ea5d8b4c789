"""Local Artin-Schreier-Witt theory over F_p((t)).

Reduction of a Witt vector modulo the image of F - id, extraction of the
upper ramification jumps of the corresponding cyclic p^n-extension, the
admissibility test for jump sequences, and a direct Galois-action check of
the lower jump when n = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .base.fp import check_prime, inv_mod
from .base.laurent import INF, LaurentSeries
from .errors import (DomainError, InternalPrecision, MismatchedRing,
                     NonTerminating, PrecisionExhausted)
from .witt import WittVector, check_caps, witt_add, witt_neg, wp


def local_witt(p: int, components: Sequence[LaurentSeries]) -> WittVector:
    """Build a Witt vector over F_p((t)), checking every component is usable."""
    x = WittVector(p, list(components))
    if x.ring != "laurent":
        raise MismatchedRing("local Witt vectors need Laurent series components")
    for i, c in enumerate(x.components):
        if not c.coeffs and c.abs_prec != INF and c.abs_prec < 0:
            raise PrecisionExhausted(f"component {i} has no significant term")
    return x


@dataclass
class ReducedForm:
    witt: WittVector
    pole_orders: list[int]
    trivial_mask: list[bool]
    steps: list[str] = field(default_factory=list)

    @property
    def p(self):
        return self.witt.p

    @property
    def n(self):
        return self.witt.n


def _pole_order(c: LaurentSeries, i: int) -> int:
    try:
        return c.pole_order()
    except InternalPrecision as exc:
        raise PrecisionExhausted(f"component {i}: {exc}") from None


def _strip_term(y: WittVector, i: int, e: int, c: int) -> WittVector:
    """Subtract F(b) - b for b = V^i(c t^(e/p)), removing ``c t^e`` from slot i."""
    p = y.p
    zero = LaurentSeries.zero(p)
    comps = [zero] * y.n
    # c^(1/p) = c over F_p
    comps[i] = LaurentSeries.monomial(p, e // p, c)
    b = WittVector(p, comps)
    return witt_add(y, witt_neg(wp(b)))


def asw_reduce(x: WittVector) -> ReducedForm:
    """Representative of ``x`` modulo ``F - id`` with no p-divisible pole orders.

    Components are processed in index order.  While slot ``i`` has a known
    polar term ``c t^e`` with ``p | e``, the vector ``F(b) - b`` with
    ``b = V^i(c t^(e/p))`` is subtracted using full Witt arithmetic; this
    leaves earlier slots alone and moves the term to ``t^(e/p)``.  The
    leading polar term is always handled first.
    """
    if x.ring != "laurent":
        raise MismatchedRing("asw_reduce works over F_p((t))")
    check_caps(x.p, x.n)
    p = x.p
    y = x
    steps: list[str] = []
    for i in range(x.n):
        guard = _pole_order(y.components[i], i) + 1
        count = 0
        while True:
            comp = y.components[i]
            _pole_order(comp, i)
            bad = sorted(e for e, _ in comp.polar_part().items() if e % p == 0)
            if not bad:
                break
            e = bad[0]
            c = comp.coefficient(e)
            y = _strip_term(y, i, e, c)
            steps.append(f"slot {i}: removed {c}*t^{e} via F-id of {c}*t^{e // p}")
            count += 1
            if count > guard:
                raise NonTerminating(f"reduction of slot {i} exceeded {guard} steps")
    poles = [_pole_order(c, i) for i, c in enumerate(y.components)]
    return ReducedForm(y, poles, [m == 0 for m in poles], steps)


def jumps_from_pole_orders(m: Sequence[int], p: int) -> list[int]:
    """Upper jumps ``u_k = max{p^(k-i) m_i : i <= k, m_i > 0}``, 0 when empty."""
    out = []
    for k in range(len(m)):
        cands = [p ** (k - i) * m[i] for i in range(k + 1) if m[i] > 0]
        out.append(max(cands) if cands else 0)
    return out


def upper_jumps(x: WittVector) -> list[int]:
    red = asw_reduce(x)
    return jumps_from_pole_orders(red.pole_orders, x.p)


def is_admissible(u: Sequence[int], p: int) -> bool:
    """Whether ``u`` can be the upper jump sequence of a Z/p^n-extension."""
    u = list(u)
    if not u or any(int(v) != v or v <= 0 for v in u):
        return False
    if u[0] % p == 0:
        return False
    for a, b in zip(u, u[1:]):
        if b < p * a:
            return False
        if b > p * a and b % p == 0:
            return False
    return True


# n = 1 Galois-action oracle ------------------------------------------------

class _ASElement:
    """Element ``sum_j c_j y^j`` of F_p((t))[y]/(y^p - y - t^-m)."""

    def __init__(self, p, m, coeffs, prec):
        self.p, self.m, self.prec = p, m, prec
        self.c = [c.truncate(prec) for c in coeffs]

    def __sub__(self, other):
        return _ASElement(self.p, self.m, [a - b for a, b in zip(self.c, other.c)], self.prec)

    def __mul__(self, other):
        p, m = self.p, self.m
        zero = LaurentSeries.zero(p)
        prod = [zero] * (2 * p - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(other.c):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        rel = LaurentSeries.monomial(p, -m)
        # y^k = y^(k-p) * (y + t^-m) for k >= p
        for k in range(2 * p - 2, p - 1, -1):
            top = prod[k]
            if top:
                prod[k - p + 1] = prod[k - p + 1] + top
                prod[k - p] = prod[k - p] + top * rel
                prod[k] = zero
        return _ASElement(p, m, prod[:p], self.prec)

    def valuation(self):
        """``v_L``, normalised by ``v_L(t) = p``."""
        vals = [self.p * c.valuation - self.m * j for j, c in enumerate(self.c) if c]
        if not vals:
            raise PrecisionExhausted("all coordinates vanish to the working precision")
        return min(vals)


def as_lower_jump_oracle(p: int, m: int, prec: int = None) -> int:
    """Lower jump of ``y^p - y = t^-m`` from the action ``y -> y + 1``.

    Builds the uniformizer ``pi = t^a y^b`` with ``pa - mb = 1`` and
    returns ``v_L(sigma(pi) - pi) - 1``.
    """
    check_prime(p)
    if m <= 0 or m % p == 0:
        raise DomainError("m must be a positive integer prime to p")
    if prec is None:
        prec = 4 * p * m
    b = (-inv_mod(m, p)) % p
    a = (1 + m * b) // p
    assert p * a - m * b == 1
    zero = LaurentSeries.zero(p)

    def elem(coeffs):
        return _ASElement(p, m, coeffs, prec)

    one = LaurentSeries.one(p)
    y = elem([zero, one] + [zero] * (p - 2)) if p > 1 else None
    y_plus_1 = elem([one, one] + [zero] * (p - 2))
    ta = elem([LaurentSeries.monomial(p, a)] + [zero] * (p - 1))
    unit = elem([one] + [zero] * (p - 1))

    def power(base, k):
        out = unit
        for _ in range(k):
            out = out * base
        return out

    pi = ta * power(y, b)
    sigma_pi = ta * power(y_plus_1, b)
    if pi.valuation() != 1:
        raise PrecisionExhausted("uniformizer lost to truncation")
    return (sigma_pi - pi).valuation() - 1
