"""Stacky curves over a coarse P^1 (or higher genus, where supported).

Divisors carry rational coefficients.  A coefficient ``c`` on a stacky
point with stabilizer order ``e`` has degree ``c/e`` and floors to
``floor(n c / e)`` on the coarse point; the coarse canonical class sits on
the reserved label ``H`` with weight 1.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .base.fp import check_prime
from .base.poly import Place, mul_coeffs
from .errors import DomainError, UnsupportedBase
from .filtration import Filtration, filtration_from_upper

COARSE = "H"


@dataclass(frozen=True)
class StackyPoint:
    label: str
    place: Place
    filtration: Filtration

    @property
    def stab_order(self) -> int:
        return self.filtration.stab_order

    @property
    def is_tame(self) -> bool:
        return self.filtration.is_tame


@dataclass(frozen=True)
class StackyCurveData:
    p: int
    coarse_genus: int
    points: tuple = ()
    log_points: tuple = ()

    def __post_init__(self):
        if self.p != 0:
            check_prime(self.p)
        if self.coarse_genus < 0:
            raise DomainError("coarse genus must be nonnegative")
        pts = tuple(self.points)
        labels = [pt.label for pt in pts]
        if len(set(labels)) != len(labels):
            raise DomainError("point labels must be distinct")
        if COARSE in labels:
            raise DomainError(f"label {COARSE!r} is reserved for the coarse class")
        places = [pt.place for pt in pts]
        if len(set(places)) != len(places):
            raise DomainError("points must sit at distinct places")
        for pt in pts:
            if self.p and pt.place.a is not None and not 0 <= pt.place.a < self.p:
                raise DomainError(f"place {pt.place} is not a residue mod {self.p}")
            if self.p == 0 and not pt.is_tame:
                raise DomainError("characteristic 0 curves only allow tame points")
        logs = tuple(self.log_points)
        if not set(logs) <= set(labels):
            raise DomainError(f"log points {sorted(set(logs) - set(labels))} are not points")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "log_points", logs)

    def weights(self) -> dict:
        w = {COARSE: 1}
        w.update({pt.label: pt.stab_order for pt in self.points})
        return w

    def point(self, label: str) -> StackyPoint:
        for pt in self.points:
            if pt.label == label:
                return pt
        raise KeyError(label)

    # JSON -----------------------------------------------------------------

    @classmethod
    def from_json(cls, obj) -> StackyCurveData:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            p = int(obj["p"])
            g0 = int(obj.get("coarse_genus", 0))
            points = []
            for entry in obj.get("points", []):
                filt = _filtration_from_json(entry["filtration"], p)
                points.append(StackyPoint(str(entry["label"]), Place.from_json(entry["place"]), filt))
            return cls(p, g0, tuple(points), tuple(obj.get("log_points", [])))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed curve spec: {exc!r}") from None

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "coarse_genus": self.coarse_genus,
            "points": [
                {"label": pt.label, "place": pt.place.to_json(), "filtration": pt.filtration.to_json()}
                for pt in self.points
            ],
            "log_points": list(self.log_points),
        }


def _filtration_from_json(f, p) -> Filtration:
    if not isinstance(f, dict):
        raise DomainError(f"bad filtration {f!r}")
    if "tame" in f:
        return Filtration.tame(int(f["tame"]), p)
    r = int(f.get("r", 1))
    if "orders" in f:
        return Filtration([int(v) for v in f["orders"]], r, p)
    if "upper_jumps" in f:
        return filtration_from_upper([Fraction(v) for v in f["upper_jumps"]], r, p)
    raise DomainError(f"filtration needs one of orders/upper_jumps/tame: {f!r}")


def fmt_q(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class QDivisor:
    entries: dict
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {k: Fraction(v) for k, v in self.entries.items() if v})

    def coeff(self, label) -> Fraction:
        return self.entries.get(label, Fraction(0))

    def weight(self, label) -> int:
        return self.weights.get(label, 1)

    def __add__(self, other: QDivisor) -> QDivisor:
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return QDivisor(out, {**self.weights, **other.weights})

    def scale(self, n) -> QDivisor:
        return QDivisor({k: n * v for k, v in self.entries.items()}, self.weights)

    def __str__(self):
        if not self.entries:
            return "0"
        order = sorted(self.entries, key=lambda k: (k != COARSE, k))
        parts = []
        for k in order:
            c = self.entries[k]
            mag = fmt_q(abs(c))
            term = k if mag == "1" else f"{mag}·{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def to_json(self):
        return {
            "entries": {k: fmt_q(v) for k, v in sorted(self.entries.items())},
            "weights": {k: w for k, w in sorted(self.weights.items())},
        }


def canonical_divisor(c: StackyCurveData) -> QDivisor:
    """``pi^* K_coarse + sum_x sum_i (|G_(x,i)| - 1) x``."""
    entries = {COARSE: 2 * c.coarse_genus - 2}
    for pt in c.points:
        entries[pt.label] = pt.filtration.ramification_sum()
    return QDivisor(entries, c.weights())


def log_divisor(c: StackyCurveData) -> QDivisor:
    return QDivisor({label: 1 for label in c.log_points}, c.weights())


def log_canonical_divisor(c: StackyCurveData) -> QDivisor:
    return canonical_divisor(c) + log_divisor(c)


def divisor_degree(d: QDivisor) -> Fraction:
    return sum((v / d.weight(k) for k, v in d.entries.items()), Fraction(0))


def genus(c: StackyCurveData) -> Fraction:
    return (divisor_degree(canonical_divisor(c)) + 2) / 2


def floor_divisor(d: QDivisor, n: int) -> dict:
    """Integer coarse divisor ``floor(n D)`` as ``label -> coefficient``."""
    if n < 0:
        raise DomainError("floor_divisor takes n >= 0; scale the divisor for negative multiples")
    return _floor(d, n)


def _floor(d: QDivisor, n: int) -> dict:
    out = {}
    for k, v in d.entries.items():
        f = math.floor(n * v / d.weight(k))
        if f:
            out[k] = f
    return out


def _floor_degree(d: QDivisor, n: int) -> int:
    return sum(_floor(d, n).values())


def _divisor_for(c: StackyCurveData, log: bool) -> QDivisor:
    return log_canonical_divisor(c) if log else canonical_divisor(c)


def h0(c: StackyCurveData, n: int, log: bool = False) -> int:
    """``h^0(nK)`` (or ``n(K + Delta)``) by the stacky Riemann-Roch recursion.

    ``h^0(nD) = deg floor(nD) - g + 1 + h^0((1-n)D)``, with ``h^0(0) = 1`` and
    ``h^0 = 0`` whenever the floor has negative degree.
    """
    return _h0(_divisor_for(c, log), c.coarse_genus, n)


def _h0(d: QDivisor, g0: int, n: int) -> int:
    if n == 0:
        return 1
    deg = _floor_degree(d, n)
    if deg < 0:
        return 0
    if n < 0:
        # correction term: on a genus-0 coarse space it is a plain count on P^1
        if g0 > 0:
            raise UnsupportedBase(
                f"coarse genus {g0}: correction term h0({n}K) is not forced to vanish"
            )
        return deg + 1
    return deg - g0 + 1 + _h0(d, g0, 1 - n)


def hilbert_table(c: StackyCurveData, N: int, log: bool = False) -> list[int]:
    if N < 0:
        raise DomainError("N must be nonnegative")
    d = _divisor_for(c, log)
    return [_h0(d, c.coarse_genus, n) for n in range(N + 1)]


# explicit section spaces on P^1 ---------------------------------------------

class _SectionSpace:
    """``L(floor(n D))`` realised as ``{u(x) / v_n(x)}`` with a fixed ``v_n``."""

    def __init__(self, c: StackyCurveData, d: QDivisor, n: int):
        flo = _floor(d, n)
        self.finite: dict[int, int] = {}
        inf = flo.get(COARSE, 0)
        for pt in c.points:
            k = flo.get(pt.label, 0)
            if pt.place.is_infinity:
                inf += k
            elif k:
                self.finite[pt.place.a] = k
        self.den_exp = {a: k for a, k in self.finite.items() if k > 0}
        self.zero_exp = {a: -k for a, k in self.finite.items() if k < 0}
        self.bound = sum(self.den_exp.values()) + inf
        self.dim = max(0, self.bound - sum(self.zero_exp.values()) + 1)


class _Arith:
    """Coefficient-list arithmetic over F_p, or over Q when p = 0."""

    def __init__(self, p: int):
        self.p = p

    def mul(self, a, b):
        if self.p:
            return mul_coeffs(a, b, self.p)
        out = [0] * (len(a) + len(b) - 1) if a and b else []
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def linear_power(self, root: int, e: int):
        out = [1]
        for _ in range(e):
            out = self.mul(out, [-root % self.p if self.p else -root, 1])
        return out

    def rank(self, rows):
        if not rows:
            return 0
        if self.p:
            return kernels.rank_mod_p(rows, self.p)
        return _rank_q(rows)


def _rank_q(rows) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    rank, ncols = 0, len(m[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def canring_generators(c: StackyCurveData, N: int, log: bool = False) -> dict:
    """Number of minimal generators of the (log) canonical ring per degree <= N.

    Degree-``n`` generators are ``dim L_n`` minus the dimension of the span
    of all products ``L_a L_b`` with ``a + b = n``, computed by exact
    linear algebra over F_p (or Q when ``p = 0``).
    """
    if c.coarse_genus != 0:
        raise UnsupportedBase("canonical ring generators need a coarse P^1")
    if N < 1:
        raise DomainError("N must be at least 1")
    d = _divisor_for(c, log)
    ar = _Arith(c.p)
    spaces = {n: _SectionSpace(c, d, n) for n in range(1, N + 1)}
    basis = {}
    for n, sp in spaces.items():
        if sp.dim == 0:
            basis[n] = []
            continue
        zero_poly = [1]
        for a, e in sp.zero_exp.items():
            zero_poly = ar.mul(zero_poly, ar.linear_power(a, e))
        basis[n] = [ar.mul([0] * i + [1], zero_poly) for i in range(sp.dim)]
    gens = {}
    for n in range(1, N + 1):
        sp = spaces[n]
        if sp.dim == 0:
            continue
        rows = []
        for a in range(1, n // 2 + 1):
            b = n - a
            if not basis[a] or not basis[b]:
                continue
            sa, sb = spaces[a], spaces[b]
            fix = [1]
            for root in set(sp.den_exp) | set(sa.den_exp) | set(sb.den_exp):
                e = sp.den_exp.get(root, 0) - sa.den_exp.get(root, 0) - sb.den_exp.get(root, 0)
                if e < 0:
                    raise ArithmeticError("denominators are not superadditive")
                fix = ar.mul(fix, ar.linear_power(root, e))
            for ua in basis[a]:
                for ub in basis[b]:
                    prod = ar.mul(ar.mul(ua, ub), fix)
                    if len(prod) > sp.bound + 1:
                        raise ArithmeticError("product left the section space")
                    rows.append(prod + [0] * (sp.bound + 1 - len(prod)))
        count = sp.dim - ar.rank(rows)
        if count:
            gens[n] = count
    return gens
