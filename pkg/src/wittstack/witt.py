"""p-typical Witt vectors of finite length.

The universal addition, multiplication and negation polynomials are
obtained over the integers from the ghost components

    w_k(Z) = sum_{i <= k} p^i Z_i^(p^(k-i))

by solving ``w_k(S) = w_k(X) (+) w_k(Y)`` for ``S_k`` one level at a time.
Each level divides by ``p^k``; the division is checked to be exact.  The
reductions mod p then give the arithmetic of ``W_n(A)`` for any
characteristic-p ring ``A``; the integer versions drive the ghost oracle.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from .base.fp import FpElem, check_prime
from .base.laurent import LaurentSeries
from .base.poly import RatFunc
from .config import get_config
from .errors import BadLength, CapExceeded, DomainError, MismatchedRing

KINDS = ("add", "mul", "neg")

Monomials = dict  # exponent tuple -> integer coefficient


# sparse integer polynomials -------------------------------------------------

def _padd(a: Monomials, b: Monomials) -> Monomials:
    out = dict(a)
    for k, v in b.items():
        s = out.get(k, 0) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _pscale(a: Monomials, k: int) -> Monomials:
    return {m: c * k for m, c in a.items()} if k else {}


def _pmul(a: Monomials, b: Monomials) -> Monomials:
    out: Monomials = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


def _ppow(a: Monomials, e: int, nvars: int) -> Monomials:
    result: Monomials = {(0,) * nvars: 1}
    base = a
    while e:
        if e & 1:
            result = _pmul(result, base)
        e >>= 1
        if e:
            base = _pmul(base, base)
    return result


def _var(i: int, nvars: int) -> Monomials:
    m = [0] * nvars
    m[i] = 1
    return {tuple(m): 1}


def _ghost_poly(vars_: Sequence[Monomials], k: int, p: int, nvars: int) -> Monomials:
    out: Monomials = {}
    for i in range(k + 1):
        out = _padd(out, _pscale(_ppow(vars_[i], p ** (k - i), nvars), p ** i))
    return out


@dataclass
class WittPolySet:
    """Universal polynomials for one operation on length-``n`` Witt vectors.

    Variables are ``X_0..X_{n-1}`` followed (for add and mul) by
    ``Y_0..Y_{n-1}``.
    """

    p: int
    n: int
    kind: str
    polys: list
    polys_mod_p: list
    _packed: tuple = field(default=None, repr=False)

    @property
    def nvars(self) -> int:
        return self.n if self.kind == "neg" else 2 * self.n

    def packed(self):
        """``(exps, coeffs, owner)`` arrays of the mod-p polynomials for the kernel."""
        if self._packed is None:
            exps, coeffs, owner = [], [], []
            for k, poly in enumerate(self.polys_mod_p):
                for m, c in poly.items():
                    exps.append(m)
                    coeffs.append(c)
                    owner.append(k)
            self._packed = (
                np.array(exps, dtype=np.int64).reshape(-1, self.nvars),
                np.array(coeffs, dtype=np.int64),
                np.array(owner, dtype=np.int64),
            )
        return self._packed

    def format(self, k: int, mod_p: bool = True) -> str:
        poly = (self.polys_mod_p if mod_p else self.polys)[k]
        names = [f"X{i}" for i in range(self.n)]
        if self.kind != "neg":
            names += [f"Y{i}" for i in range(self.n)]
        terms = []
        for m, c in sorted(poly.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True):
            mono = "*".join(
                nm if e == 1 else f"{nm}^{e}" for nm, e in zip(names, m) if e
            )
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


_cache: dict = {}
_cache_lock = threading.Lock()


def _build(p: int, n: int, kind: str) -> WittPolySet:
    nvars = n if kind == "neg" else 2 * n
    xs = [_var(i, nvars) for i in range(n)]
    ys = [_var(n + i, nvars) for i in range(n)] if kind != "neg" else None
    polys: list[Monomials] = []
    for k in range(n):
        if kind == "add":
            target = _padd(_ghost_poly(xs, k, p, nvars), _ghost_poly(ys, k, p, nvars))
        elif kind == "mul":
            target = _pmul(_ghost_poly(xs, k, p, nvars), _ghost_poly(ys, k, p, nvars))
        else:
            target = _pscale(_ghost_poly(xs, k, p, nvars), -1)
        rest = target
        for i in range(k):
            rest = _padd(rest, _pscale(_ppow(polys[i], p ** (k - i), nvars), -(p ** i)))
        pk = p ** k
        if any(c % pk for c in rest.values()):
            raise ArithmeticError(f"inexact division by p^{k} building {kind} polynomials")
        polys.append({m: c // pk for m, c in rest.items()})
    for k in range(n):
        # ghost identity, asserted at construction time
        lhs = _ghost_poly(polys, k, p, nvars)
        if kind == "add":
            rhs = _padd(_ghost_poly(xs, k, p, nvars), _ghost_poly(ys, k, p, nvars))
        elif kind == "mul":
            rhs = _pmul(_ghost_poly(xs, k, p, nvars), _ghost_poly(ys, k, p, nvars))
        else:
            rhs = _pscale(_ghost_poly(xs, k, p, nvars), -1)
        if lhs != rhs:
            raise ArithmeticError(f"ghost identity fails for {kind} at level {k}")
    mod_p = [{m: c % p for m, c in poly.items() if c % p} for poly in polys]
    return WittPolySet(p, n, kind, polys, mod_p)


def check_caps(p: int, n: int) -> None:
    cfg = get_config()
    if not 1 <= n <= cfg.max_n or p > cfg.max_p:
        raise CapExceeded(
            f"(p, n) = ({p}, {n}) outside caps p <= {cfg.max_p}, n <= {cfg.max_n}"
        )


def gen_witt_polys(p: int, n: int, kind: str) -> WittPolySet:
    """Cached universal polynomials for ``kind`` in ``W_n`` at the prime ``p``."""
    check_prime(p)
    if kind not in KINDS:
        raise DomainError(f"unknown Witt operation {kind!r}")
    check_caps(p, n)
    key = (p, n, kind)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    built = _build(p, n, kind)
    with _cache_lock:
        return _cache.setdefault(key, built)


# evaluation ----------------------------------------------------------------

def _ring_of(c):
    if isinstance(c, FpElem):
        return "fp", c.p
    if isinstance(c, LaurentSeries):
        return "laurent", c.p
    if isinstance(c, RatFunc):
        return "ratfunc", c.p
    if isinstance(c, int) and not isinstance(c, bool):
        return "int", None
    raise MismatchedRing(f"unsupported coefficient {c!r}")


def _zero_like(ring, p):
    if ring == "fp":
        return FpElem(0, p)
    if ring == "laurent":
        return LaurentSeries.zero(p)
    if ring == "ratfunc":
        return RatFunc.from_int(0, p)
    return 0


def _eval_fp(poly: Monomials, vals: Sequence[int], p: int) -> int:
    acc = 0
    for m, c in poly.items():
        term = c
        for v, e in zip(vals, m):
            if e:
                term = term * pow(v, e, p) % p
                if not term:
                    break
        acc += term
    return acc % p


def _eval_generic(poly: Monomials, vals: Sequence, zero, powcache: dict):
    acc = zero
    for m, c in poly.items():
        term = None
        for i, e in enumerate(m):
            if e:
                key = (i, e)
                pw = powcache.get(key)
                if pw is None:
                    pw = powcache[key] = vals[i] ** e
                term = pw if term is None else term * pw
        if term is None:
            acc = acc + c
        else:
            acc = acc + (term * c if c != 1 else term)
    return acc


def _eval_int(poly: Monomials, vals: Sequence[int]) -> int:
    acc = 0
    for m, c in poly.items():
        term = c
        for v, e in zip(vals, m):
            if e:
                term *= v ** e
        acc += term
    return acc


def _evaluate(ps: WittPolySet, ring: str, p: int, vals: list) -> list:
    if ring == "int":
        return [_eval_int(poly, vals) for poly in ps.polys]
    if ring == "fp":
        ints = [v.value for v in vals]
        return [FpElem(_eval_fp(poly, ints, p), p) for poly in ps.polys_mod_p]
    zero = _zero_like(ring, p)
    cache: dict = {}
    return [_eval_generic(poly, vals, zero, cache) for poly in ps.polys_mod_p]


class WittVector:
    """Element of ``W_n(A)`` with components ``(a_0, ..., a_{n-1})``.

    ``A`` is F_p (:class:`FpElem` components; plain ints are converted),
    Laurent series or rational functions over F_p.  Integer lifts for the
    ghost oracle are built with :meth:`lift`.
    """

    __slots__ = ("p", "components", "ring")

    def __init__(self, p: int, components: Sequence):
        check_prime(p)
        comps = [FpElem(c, p) if isinstance(c, int) and not isinstance(c, bool) else c
                 for c in components]
        self._setup(p, comps)

    def _setup(self, p, comps):
        if not comps:
            raise BadLength("Witt vectors need at least one component")
        rings = {_ring_of(c) for c in comps}
        if len(rings) != 1:
            raise MismatchedRing("components live in different rings")
        ring, cp = rings.pop()
        if cp is not None and cp != p:
            raise MismatchedRing(f"components have characteristic {cp}, vector has p={p}")
        self.p = p
        self.components = tuple(comps)
        self.ring = ring

    @classmethod
    def lift(cls, p: int, ints: Sequence[int]) -> WittVector:
        obj = cls.__new__(cls)
        check_prime(p)
        obj._setup(p, [int(v) for v in ints])
        return obj

    @classmethod
    def zero_like(cls, x: WittVector) -> WittVector:
        z = _zero_like(x.ring, x.p)
        return x._new([z] * x.n)

    def _new(self, comps):
        obj = WittVector.__new__(WittVector)
        obj.p, obj.components, obj.ring = self.p, tuple(comps), self.ring
        return obj

    @property
    def n(self) -> int:
        return len(self.components)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.components[i]

    def _check(self, other: WittVector):
        if not isinstance(other, WittVector):
            raise MismatchedRing(f"expected a WittVector, got {type(other).__name__}")
        if (self.p, self.n, self.ring) != (other.p, other.n, other.ring):
            raise MismatchedRing(
                f"W_{self.n} over {self.ring} (p={self.p}) vs "
                f"W_{other.n} over {other.ring} (p={other.p})"
            )

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return (self.p, self.ring, self.components) == (other.p, other.ring, other.components)

    def __hash__(self):
        return hash((self.p, self.ring, self.components))

    def __repr__(self):
        return f"WittVector(p={self.p}, {self})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def witt_add(x: WittVector, y: WittVector) -> WittVector:
    x._check(y)
    ps = gen_witt_polys(x.p, x.n, "add")
    return x._new(_evaluate(ps, x.ring, x.p, list(x.components) + list(y.components)))


def witt_mul(x: WittVector, y: WittVector) -> WittVector:
    x._check(y)
    ps = gen_witt_polys(x.p, x.n, "mul")
    return x._new(_evaluate(ps, x.ring, x.p, list(x.components) + list(y.components)))


def witt_neg(x: WittVector) -> WittVector:
    ps = gen_witt_polys(x.p, x.n, "neg")
    return x._new(_evaluate(ps, x.ring, x.p, list(x.components)))


def witt_sub(x: WittVector, y: WittVector) -> WittVector:
    return witt_add(x, witt_neg(y))


def witt_scalar(k: int, x: WittVector) -> WittVector:
    """``x`` added to itself ``k`` times (``k >= 0``)."""
    acc = WittVector.zero_like(x)
    base = x
    while k:
        if k & 1:
            acc = witt_add(acc, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return acc


def _char_p_power(c, p):
    if isinstance(c, LaurentSeries):
        return c.frobenius()
    return c ** p


def frobenius(x: WittVector) -> WittVector:
    if x.ring == "int":
        raise DomainError("componentwise Frobenius needs a characteristic-p coefficient ring")
    return x._new([_char_p_power(c, x.p) for c in x.components])


def verschiebung(x: WittVector) -> WittVector:
    z = _zero_like(x.ring, x.p)
    return x._new([z] + list(x.components[:-1]))


def truncate(x: WittVector, m: int) -> WittVector:
    if not 1 <= m <= x.n:
        raise BadLength(f"cannot truncate length {x.n} to {m}")
    return x._new(x.components[:m])


def wp(x: WittVector) -> WittVector:
    """The Artin-Schreier-Witt map ``F(x) - x``."""
    return witt_add(frobenius(x), witt_neg(x))


def ghost_map(x: WittVector) -> list[int]:
    """Ghost components of an integer-lift vector."""
    if x.ring != "int":
        raise DomainError("ghost components are taken on integer lifts")
    p = x.p
    return [sum(p ** i * x.components[i] ** (p ** (k - i)) for i in range(k + 1))
            for k in range(x.n)]


def teichmuller_digit(c: int, p: int, n: int) -> int:
    """Teichmuller representative of ``c mod p`` in ``Z/p^n``."""
    return pow(c % p, p ** (n - 1), p ** n)


def to_zpn(x: WittVector) -> int:
    """Image of ``x in W_n(F_p)`` in ``Z/p^n`` via Teichmuller digits."""
    if x.ring != "fp":
        raise MismatchedRing("to_zpn needs F_p components")
    p, n = x.p, x.n
    mod = p ** n
    return sum(teichmuller_digit(c.value, p, n) * p ** i for i, c in enumerate(x.components)) % mod


def from_zpn(r: int, p: int, n: int) -> WittVector:
    """Inverse of :func:`to_zpn`."""
    check_prime(p)
    mod = p ** n
    r %= mod
    digits = []
    for i in range(n):
        d = (r // p ** i) % p
        digits.append(d)
        r = (r - teichmuller_digit(d, p, n) * p ** i) % mod
    return WittVector(p, digits)


def fp_table(p: int, n: int, kind: str, pairs: np.ndarray) -> np.ndarray:
    """Evaluate ``kind`` on a batch of F_p vector pairs with the compiled kernel.

    ``pairs`` has shape ``(batch, 2n)`` (or ``(batch, n)`` for neg).
    """
    ps = gen_witt_polys(p, n, kind)
    exps, coeffs, owner = ps.packed()
    return kernels.eval_polys(exps, coeffs, owner, n, pairs, p)


def all_vectors(p: int, n: int) -> np.ndarray:
    """Every element of ``W_n(F_p)`` as rows of digits, in ``from_zpn`` order."""
    return np.array([[v.value for v in from_zpn(r, p, n).components] for r in range(p ** n)],
                    dtype=np.int64)
