"""Finite-precision Laurent series over F_p.

A series is stored as the exponent of its first nonzero coefficient, the
run of coefficients from there to the last nonzero one, and an absolute
precision ``abs_prec``: every coefficient of ``t^e`` with ``e < abs_prec``
is known (those past the stored run are zero).  ``abs_prec`` is ``inf``
for exact series such as ``t^-3 + 2``.
"""
from __future__ import annotations

import math
from typing import Sequence

from .. import kernels
from ..errors import DomainError, InternalPrecision
from .fp import FpElem, check_prime, inv_mod
from .poly import Place, Poly, RatFunc, mul_coeffs

INF = math.inf


class LaurentSeries:
    __slots__ = ("p", "start", "coeffs", "abs_prec")

    def __init__(self, p: int, start: int, coeffs: Sequence[int], abs_prec=INF):
        check_prime(p)
        c = [int(v) % p for v in coeffs]
        if abs_prec != INF:
            abs_prec = int(abs_prec)
            keep = max(0, abs_prec - start)
            c = c[:keep]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        c = c[lo:]
        while c and c[-1] == 0:
            c.pop()
        self.p = p
        self.start = start + lo if c else 0
        self.coeffs = tuple(c)
        self.abs_prec = abs_prec

    # construction helpers

    @classmethod
    def zero(cls, p, abs_prec=INF):
        return cls(p, 0, (), abs_prec)

    @classmethod
    def one(cls, p):
        return cls(p, 0, (1,))

    @classmethod
    def monomial(cls, p, k, coeff=1, abs_prec=INF):
        return cls(p, k, (coeff,), abs_prec)

    @classmethod
    def from_dict(cls, p, terms: dict[int, int], abs_prec=INF):
        terms = {k: v % p for k, v in terms.items() if v % p}
        if not terms:
            return cls.zero(p, abs_prec)
        lo, hi = min(terms), max(terms)
        return cls(p, lo, [terms.get(k, 0) for k in range(lo, hi + 1)], abs_prec)

    # inspection

    @property
    def valuation(self):
        """Exponent of the leading known nonzero term; ``inf`` if none is known."""
        return self.start if self.coeffs else INF

    @property
    def prec(self):
        """Relative precision: number of known terms from the valuation on."""
        if not self.coeffs:
            return 0
        return self.abs_prec - self.start

    @property
    def is_exact(self):
        return self.abs_prec == INF

    def is_zero(self):
        return not self.coeffs and self.abs_prec == INF

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, e: int) -> int:
        if e >= self.abs_prec:
            raise InternalPrecision(f"coefficient of t^{e} unknown (O(t^{self.abs_prec}))")
        i = e - self.start
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self):
        """Known nonzero terms as ``(exponent, coefficient)`` pairs."""
        return [(self.start + i, c) for i, c in enumerate(self.coeffs) if c]

    def leading(self) -> tuple[int, int]:
        if not self.coeffs:
            raise InternalPrecision("no significant term")
        return self.start, self.coeffs[0]

    def pole_order(self):
        """``-valuation`` when the series has a known pole, else 0.

        Raises :class:`InternalPrecision` when the polar part is not fully
        known, i.e. no nonzero term is known and ``abs_prec < 0``.
        """
        if self.coeffs:
            return max(0, -self.start)
        if self.abs_prec < 0:
            raise InternalPrecision("polar part not determined by available precision")
        return 0

    def polar_part(self) -> dict[int, int]:
        return {e: c for e, c in self.terms() if e < 0}

    # arithmetic

    def _other(self, other):
        if isinstance(other, LaurentSeries):
            if other.p != self.p:
                raise DomainError("characteristic mismatch")
            return other
        if isinstance(other, (int, FpElem)):
            return LaurentSeries(self.p, 0, (int(other),))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return LaurentSeries(self.p, self.start, self.coeffs, min(self.abs_prec, o.abs_prec))
        if not self.coeffs:
            return LaurentSeries(self.p, o.start, o.coeffs, min(self.abs_prec, o.abs_prec))
        lo = min(self.start, o.start)
        hi = max(self.start + len(self.coeffs), o.start + len(o.coeffs))
        c = [0] * (hi - lo)
        for i, v in enumerate(self.coeffs):
            c[self.start - lo + i] += v
        for i, v in enumerate(o.coeffs):
            c[o.start - lo + i] += v
        return LaurentSeries(self.p, lo, c, min(self.abs_prec, o.abs_prec))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(self.p, self.start, [-v for v in self.coeffs], self.abs_prec)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FpElem)):
            k = int(other) % self.p
            if k == 0:
                return LaurentSeries.zero(self.p, self.abs_prec if self.coeffs else self.abs_prec)
            return LaurentSeries(self.p, self.start, [v * k for v in self.coeffs], self.abs_prec)
        o = self._other(other)
        if o is None:
            return NotImplemented
        va, vb = self.valuation, o.valuation
        # a known-zero factor times anything: precision from the other factor's valuation
        cand = []
        if self.abs_prec != INF:
            cand.append(self.abs_prec + (vb if vb != INF else o.abs_prec))
        if o.abs_prec != INF:
            cand.append(o.abs_prec + (va if va != INF else self.abs_prec))
        abs_prec = min(cand) if cand else INF
        if not self.coeffs or not o.coeffs:
            return LaurentSeries.zero(self.p, abs_prec)
        start = self.start + o.start
        if abs_prec != INF:
            n = max(0, abs_prec - start)
            a, b = self.coeffs[:n], o.coeffs[:n]
        else:
            a, b = self.coeffs, o.coeffs
        return LaurentSeries(self.p, start, mul_coeffs(a, b, self.p), abs_prec)

    __rmul__ = __mul__

    def frobenius(self, k: int = 1) -> LaurentSeries:
        """``self ** (p**k)``: exponents scale by ``p**k``, coefficients are fixed."""
        q = self.p ** k
        terms = {q * e: c for e, c in self.terms()}
        ap = self.abs_prec * q if self.abs_prec != INF else INF
        return LaurentSeries.from_dict(self.p, terms, ap)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return LaurentSeries.one(self.p)
        result = None
        k = 0
        while e:
            d = e % self.p
            if d:
                base = self.frobenius(k) if k else self
                piece = base
                for _ in range(d - 1):
                    piece = piece * base
                result = piece if result is None else result * piece
            e //= self.p
            k += 1
        return result

    def inverse(self, rel_prec: int | None = None) -> LaurentSeries:
        if not self.coeffs:
            raise InternalPrecision("cannot invert a series with no significant term")
        v = self.start
        if len(self.coeffs) == 1 and self.is_exact:
            return LaurentSeries(self.p, -v, (inv_mod(self.coeffs[0], self.p),))
        if self.is_exact:
            if rel_prec is None:
                raise InternalPrecision("inverse of an exact non-monomial series needs a precision")
            n = rel_prec
        else:
            n = self.abs_prec - v if rel_prec is None else min(rel_prec, self.abs_prec - v)
        if n < 1:
            raise InternalPrecision("inverse would have no significant term")
        inv = kernels.series_inv(self.coeffs[:n], n, self.p)
        return LaurentSeries(self.p, -v, inv, -v + n)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_exact and len(o.coeffs) > 1:
            if self.is_exact or not self.coeffs:
                raise InternalPrecision("quotient by an exact non-monomial series needs a precision")
            return self * o.inverse(self.prec)
        return self * o.inverse()

    def truncate(self, abs_prec) -> LaurentSeries:
        return LaurentSeries(self.p, self.start, self.coeffs, min(self.abs_prec, abs_prec))

    def agrees_with(self, other: LaurentSeries) -> bool:
        """Equality up to the smaller of the two absolute precisions."""
        n = min(self.abs_prec, other.abs_prec)
        return self.truncate(n) == other.truncate(n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentSeries(self.p, 0, (other,))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.p, self.start, self.coeffs, self.abs_prec) == (
            other.p, other.start, other.coeffs, other.abs_prec)

    def __hash__(self):
        return hash((self.p, self.start, self.coeffs, self.abs_prec))

    def __repr__(self):
        return f"LaurentSeries({self})"

    def __str__(self):
        parts = []
        for e, c in self.terms():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "t"
            else:
                mono = f"t^{e}"
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        if self.abs_prec != INF:
            parts.append(f"O(t^{self.abs_prec})")
        return " + ".join(parts) if parts else "0"


def _local_parts(f: RatFunc, place: Place) -> tuple[int, Poly, Poly]:
    """Write ``f`` in the local parameter as ``t^s * A(t) / B(t)``."""
    if place.is_infinity:
        dn, dd = f.num.degree, f.den.degree
        return dd - dn, f.num.reverse(), f.den.reverse()
    return 0, f.num.shift(place.a), f.den.shift(place.a)


def laurent_expand(f: RatFunc, place: Place, prec: int) -> LaurentSeries:
    """Expansion of ``f`` at ``place`` with ``prec`` terms past the valuation.

    The local parameter is ``t = x - a`` at a finite place and ``t = 1/x``
    at infinity.  When the denominator is a monomial in ``t`` the result is
    exact.
    """
    if prec < 1:
        raise DomainError("precision must be at least 1")
    p = f.p
    if f.is_zero():
        return LaurentSeries.zero(p)
    s, a, b = _local_parts(f, place)
    va, vb = a.low_order(), b.low_order()
    a_c, b_c = a.c[va:], b.c[vb:]
    v = s + va - vb
    if len(b_c) == 1:
        k = inv_mod(b_c[0], p)
        return LaurentSeries(p, v, [c * k for c in a_c])
    inv = kernels.series_inv(b_c[:prec], prec, p)
    prod = mul_coeffs(a_c[:prec], [int(c) for c in inv], p)[:prec]
    out = LaurentSeries(p, v, prod, v + prec)
    if out.valuation != v:
        raise InternalPrecision("leading coefficient vanished during expansion")
    return out
