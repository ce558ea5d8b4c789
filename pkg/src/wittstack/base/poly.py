"""Univariate polynomials and rational functions over F_p, and places of P^1."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .. import kernels
from ..errors import DomainError
from .fp import FpElem, check_prime, inv_mod

# below this many coefficient products the Python loop beats array setup
_KERNEL_THRESHOLD = 256


def _trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def mul_coeffs(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Coefficient-list product mod p (lowest degree first)."""
    if not a or not b:
        return []
    # the int64 kernels need every partial sum below 2^63
    if len(a) * len(b) >= _KERNEL_THRESHOLD and min(len(a), len(b)) * (p - 1) ** 2 < 2 ** 62:
        return [int(v) for v in kernels.poly_mul(a, b, p)]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [v % p for v in out]


class Poly:
    """Polynomial over F_p with residues stored lowest degree first.

    The zero polynomial has an empty coefficient tuple; otherwise the last
    coefficient is nonzero.
    """

    __slots__ = ("c", "p")

    def __init__(self, coeffs: Iterable[int] = (), p: int = 2):
        check_prime(p)
        self.p = p
        self.c = _trim([int(v) % p for v in coeffs])

    @classmethod
    def _raw(cls, c, p):
        obj = cls.__new__(cls)
        obj.p = p
        obj.c = _trim(list(c))
        return obj

    @classmethod
    def x(cls, p):
        return cls._raw([0, 1], p)

    @classmethod
    def const(cls, v, p):
        return cls._raw([int(v) % p], p)

    @classmethod
    def monomial(cls, k, p, coeff=1):
        return cls._raw([0] * k + [int(coeff) % p], p)

    @property
    def coefficients(self) -> list[FpElem]:
        return [FpElem(v, self.p) for v in self.c]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self):
        return not self.c

    def lead(self) -> int:
        return self.c[-1] if self.c else 0

    def _other(self, other):
        if isinstance(other, Poly):
            if other.p != self.p:
                raise DomainError("characteristic mismatch")
            return other
        if isinstance(other, (int, FpElem)):
            return Poly.const(int(other), self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = max(len(self.c), len(o.c))
        a = self.c + (0,) * (n - len(self.c))
        b = o.c + (0,) * (n - len(o.c))
        return Poly._raw([(x + y) % self.p for x, y in zip(a, b)], self.p)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([(-x) % self.p for x in self.c], self.p)

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
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Poly._raw(mul_coeffs(self.c, o.c, self.p), self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative power of a polynomial")
        result = Poly.const(1, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, k: int) -> Poly:
        return Poly._raw([(v * k) % self.p for v in self.c], self.p)

    def monic(self) -> Poly:
        if not self.c:
            return self
        return self.scale(inv_mod(self.c[-1], self.p))

    def __divmod__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        r = list(self.c)
        dq = len(r) - len(o.c)
        if dq < 0:
            return Poly._raw([], p), self
        q = [0] * (dq + 1)
        inv = inv_mod(o.c[-1], p)
        for k in range(dq, -1, -1):
            coef = (r[k + len(o.c) - 1] * inv) % p
            q[k] = coef
            if coef:
                for j, oc in enumerate(o.c):
                    r[k + j] = (r[k + j] - coef * oc) % p
        return Poly._raw(q, p), Poly._raw(r[: len(o.c) - 1], p)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __call__(self, x: int) -> int:
        acc = 0
        for v in reversed(self.c):
            acc = (acc * x + v) % self.p
        return acc

    def shift(self, a: int) -> Poly:
        """The polynomial ``f(x + a)``."""
        out = Poly._raw([], self.p)
        lin = Poly._raw([a % self.p, 1], self.p)
        for v in reversed(self.c):
            out = out * lin + v
        return out

    def reverse(self, d: int | None = None) -> Poly:
        """``x^d f(1/x)``, with ``d`` defaulting to the degree."""
        if d is None:
            d = self.degree
        if d < self.degree:
            raise DomainError("reversal degree below polynomial degree")
        c = list(self.c) + [0] * (d + 1 - len(self.c))
        return Poly._raw(c[::-1], self.p)

    def order_at(self, a: int) -> int | float:
        """Multiplicity of ``a`` as a root; ``inf`` for the zero polynomial."""
        if self.is_zero():
            return math.inf
        k = 0
        f = self
        lin = Poly._raw([(-a) % self.p, 1], self.p)
        while True:
            q, r = divmod(f, lin)
            if not r.is_zero():
                return k
            f, k = q, k + 1

    def low_order(self) -> int | float:
        """Order of vanishing at x = 0."""
        for i, v in enumerate(self.c):
            if v:
                return i
        return math.inf

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.p == other.p and self.c == other.c
        if isinstance(other, int):
            return self == Poly.const(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash(("Poly", self.p, self.c))

    def __repr__(self):
        return f"Poly({list(self.c)}, p={self.p})"

    def to_str(self, var="x") -> str:
        if not self.c:
            return "0"
        terms = []
        for k in range(len(self.c) - 1, -1, -1):
            v = self.c[k]
            if not v:
                continue
            if k == 0:
                terms.append(str(v))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(terms)

    __str__ = to_str


@dataclass(frozen=True)
class Place:
    """An F_p-rational place of P^1: ``x = a`` or the point at infinity."""

    a: int | None = None

    @classmethod
    def finite(cls, a: int) -> Place:
        return cls(int(a))

    @classmethod
    def infinity(cls) -> Place:
        return cls(None)

    @property
    def is_infinity(self) -> bool:
        return self.a is None

    @property
    def kind(self) -> str:
        return "infinity" if self.a is None else "finite"

    def sort_key(self):
        return (1, 0) if self.a is None else (0, self.a)

    def to_json(self):
        return "infinity" if self.a is None else {"finite": self.a}

    @classmethod
    def from_json(cls, obj) -> Place:
        if obj == "infinity" or obj == {"infinity": None}:
            return cls.infinity()
        if isinstance(obj, dict) and set(obj) == {"finite"}:
            return cls.finite(int(obj["finite"]))
        raise DomainError(f"bad place {obj!r}")

    def __str__(self):
        return "inf" if self.a is None else f"x={self.a}"


class RatFunc:
    """Element of F_p(x) in lowest terms with a monic denominator."""

    __slots__ = ("num", "den", "p")

    def __init__(self, num: Poly, den: Poly | None = None):
        p = num.p
        if den is None:
            den = Poly.const(1, p)
        if den.p != p:
            raise DomainError("characteristic mismatch")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, Poly.const(1, p)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = inv_mod(den.lead(), p)
            num, den = num.scale(lc), den.scale(lc)
        self.num, self.den, self.p = num, den, p

    @classmethod
    def from_int(cls, v, p):
        return cls(Poly.const(v, p))

    @classmethod
    def x(cls, p):
        return cls(Poly.x(p))

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree == 0

    def _other(self, other):
        if isinstance(other, RatFunc):
            if other.p != self.p:
                raise DomainError("characteristic mismatch")
            return other
        if isinstance(other, (int, FpElem)):
            return RatFunc.from_int(int(other), self.p)
        if isinstance(other, Poly):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

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
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            return RatFunc.from_int(1, self.p) / (self ** (-e))
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def shift(self, c: int) -> RatFunc:
        """``f(x + c)``."""
        return RatFunc(self.num.shift(c), self.den.shift(c))

    def invert_variable(self) -> RatFunc:
        """``f(1/x)``."""
        dn, dd = self.num.degree, self.den.degree
        if self.is_zero():
            return self
        num, den = self.num.reverse(), self.den.reverse()
        k = dd - dn
        xk = Poly.monomial(abs(k), self.p)
        return RatFunc(num * xk, den) if k >= 0 else RatFunc(num, den * xk)

    def valuation(self, place: Place) -> int | float:
        return valuation(self, place)

    def __repr__(self):
        return f"RatFunc({self})"

    def to_str(self, var="x"):
        n = self.num.to_str(var)
        if self.den.degree == 0:
            return n
        return f"({n})/({self.den.to_str(var)})"

    __str__ = to_str


def valuation(f: RatFunc, place: Place) -> int | float:
    """Order of vanishing of ``f`` at ``place``; negative for poles, inf for 0."""
    if f.is_zero():
        return math.inf
    if place.is_infinity:
        return f.den.degree - f.num.degree
    return f.num.order_at(place.a) - f.den.order_at(place.a)


def rational_roots(f: Poly) -> tuple[dict[int, int], Poly]:
    """F_p-rational roots of ``f`` with multiplicity, and the root-free cofactor."""
    roots = {}
    rest = f
    for a in range(f.p):
        k = rest.order_at(a)
        if k:
            roots[a] = k
            rest = rest // (Poly._raw([(-a) % f.p, 1], f.p) ** k)
    return roots, rest
