"""Global Z/p^n-covers of P^1 given by a Witt vector of rational functions.

Each pole of a component is a candidate branch point.  The components are
expanded there, the local Witt vector is reduced, its upper jumps give the
inertia filtration (tame part trivial), and the resulting points define the
quotient stacky curve.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .asw import ReducedForm, asw_reduce, jumps_from_pole_orders, local_witt
from .base.fp import check_prime
from .base.laurent import LaurentSeries, laurent_expand
from .base.poly import Place, RatFunc, rational_roots, valuation
from .errors import DomainError, IrrationalBranchPoint
from .filtration import Filtration, filtration_from_lower, filtration_from_upper, upper_to_lower
from .stacky import (StackyCurveData, StackyPoint, canonical_divisor,
                     divisor_degree, genus, hilbert_table)
from .witt import check_caps


@dataclass(frozen=True)
class CoverSpec:
    p: int
    n: int
    components: tuple
    precision_hint: int | None = None

    def __post_init__(self):
        check_prime(self.p)
        comps = tuple(self.components)
        if len(comps) != self.n:
            raise DomainError(f"expected {self.n} components, got {len(comps)}")
        if any(not isinstance(c, RatFunc) or c.p != self.p for c in comps):
            raise DomainError(f"components must be rational functions over F_{self.p}")
        if all(c.is_zero() for c in comps):
            raise DomainError("all components are zero: the cover is trivial")
        check_caps(self.p, self.n)
        object.__setattr__(self, "components", comps)

    def map_components(self, f) -> CoverSpec:
        return CoverSpec(self.p, self.n, tuple(f(c) for c in self.components), self.precision_hint)


@dataclass
class BranchData:
    place: Place
    upper_jumps: list
    filtration: Filtration
    reduced: ReducedForm


@dataclass
class CoverAnalysis:
    spec: CoverSpec
    branch: list
    curve: StackyCurveData
    notes: list = field(default_factory=list)


def _poles(f: RatFunc) -> list[Place]:
    if f.is_zero():
        return []
    roots, rest = rational_roots(f.den)
    if rest.degree > 0:
        raise IrrationalBranchPoint(
            f"denominator of {f} has an irreducible factor of degree > 1 over F_{f.p}: {rest}"
        )
    out = [Place.finite(a) for a in sorted(roots)]
    if f.num.degree > f.den.degree:
        out.append(Place.infinity())
    return out


def branch_places(spec: CoverSpec) -> list[Place]:
    """Poles of the components over F_p-rational places and infinity, sorted."""
    places = set()
    for c in spec.components:
        places.update(_poles(c))
    return sorted(places, key=Place.sort_key)


def place_label(place: Place) -> str:
    return "Q_inf" if place.is_infinity else f"Q_{place.a}"


def local_precision(spec: CoverSpec, place: Place) -> int:
    if spec.precision_hint is not None:
        return spec.precision_hint
    maxpole = max((max(0, -valuation(c, place)) for c in spec.components if not c.is_zero()),
                  default=0)
    return spec.n * spec.p * maxpole + 8


def analyze_cover(spec: CoverSpec) -> CoverAnalysis:
    notes = []
    branch = []
    for place in branch_places(spec):
        prec = local_precision(spec, place)
        series = [LaurentSeries.zero(spec.p) if c.is_zero() else laurent_expand(c, place, prec)
                  for c in spec.components]
        red = asw_reduce(local_witt(spec.p, series))
        ups = jumps_from_pole_orders(red.pole_orders, spec.p)
        label = place_label(place)
        for step in red.steps:
            notes.append(f"{label}: {step}")
        if not any(ups):
            notes.append(f"{label}: poles reduce away; place is unramified")
            continue
        filt = filtration_from_upper(ups, 1, spec.p)
        branch.append(BranchData(place, ups, filt, red))
    if not branch:
        notes.append("no ramified places: the cover is etale over P^1")
    notes.append("germs taken from reduced representatives")
    points = tuple(StackyPoint(place_label(b.place), b.place, b.filtration) for b in branch)
    curve = StackyCurveData(spec.p, 0, points, ())
    return CoverAnalysis(spec, branch, curve, notes)


# comparison with the reference Z/p^2 example -------------------------------

def reference_asw_lower_jumps(p: int, m: int) -> list[int]:
    """Reference lower jumps ``(m, m(p^2+1))`` for ``y^p - y = x^-m, z^p - z = y x^-m``."""
    return [m, m * (p * p + 1)]


def herbrand_asw_lower_jumps(p: int, m: int) -> list[int]:
    """Lower jumps implied by upper jumps ``(m, pm)``."""
    return [int(v) for v in upper_to_lower([m, p * m], 1, p)]


def reference_asw_genus(p: int, m: int) -> Fraction:
    return Fraction(m * p ** 3 + p * p - m - 1, 2 * p * p)


def asw_quotient_curve(p: int, m: int, lower_jumps: Sequence[int] | None = None) -> StackyCurveData:
    """Quotient of the Z/p^2 example by its Galois group: one point of stabilizer p^2."""
    lows = reference_asw_lower_jumps(p, m) if lower_jumps is None else list(lower_jumps)
    pt = StackyPoint("Q", Place.infinity(), filtration_from_lower(lows, 1, p))
    return StackyCurveData(p, 0, (pt,), ())


def asw_h0_direct(p: int, m: int, n: int) -> int:
    """Direct closed form ``-2n + floor(n(mp^3+p^2-m-1)/p^2) + 1`` for the reference curve."""
    return -2 * n + (n * (m * p ** 3 + p * p - m - 1)) // (p * p) + 1


def asw_h0_simplified(p: int, m: int, n: int) -> int:
    """Proposed simplification ``n(mp-1) + floor(-n(m+1)/p^2)`` of :func:`asw_h0_direct`."""
    return n * (m * p - 1) + (-n * (m + 1)) // (p * p)


def simplification_note(p: int, m: int, n: int) -> str:
    a, b = asw_h0_direct(p, m, n), asw_h0_simplified(p, m, n)
    rel = "equal" if a == b else f"differ by {a - b}"
    return f"p={p} m={m} n={n}: direct {a}, simplified {b} ({rel})"


def _matches_reference_shape(an: CoverAnalysis):
    spec = an.spec
    if spec.n != 2 or len(an.branch) != 1:
        return None
    b = an.branch[0]
    m1, m2 = b.reduced.pole_orders
    if m1 > 0 and m2 == 0:
        return m1
    return None


def quotient_report(spec: CoverSpec, N: int = 10) -> dict:
    an = analyze_cover(spec)
    curve = an.curve
    K = canonical_divisor(curve)
    g = genus(curve)
    report = {
        "analysis": an,
        "K": K,
        "degree": divisor_degree(K),
        "genus": g,
        "hilbert": hilbert_table(curve, N),
        "notes": list(an.notes),
        "comparison": None,
    }
    if divisor_degree(K) != 2 * g - 2:
        raise ArithmeticError("degree/genus identity violated")
    m = _matches_reference_shape(an)
    if m is not None:
        p = spec.p
        ref = reference_asw_lower_jumps(p, m)
        derived = herbrand_asw_lower_jumps(p, m)
        derived_lows = an.branch[0].filtration.lower_jumps
        if derived_lows != derived:
            raise ArithmeticError("assembled filtration disagrees with Herbrand translation")
        reference_curve = asw_quotient_curve(p, m, ref)
        agree = ref == derived
        report["comparison"] = {
            "m": m,
            "reference_lower_jumps": ref,
            "derived_lower_jumps": derived,
            "reference_K_coefficient": m * p ** 3 + p * p - m - 1,
            "derived_K_coefficient": an.branch[0].filtration.ramification_sum(),
            "reference_genus": reference_asw_genus(p, m),
            "reference_curve_genus": genus(reference_curve),
            "derived_genus": g,
            "agree": agree,
        }
        report["notes"].append(
            f"reference example lower jumps {ref} vs Herbrand {derived}: "
            + ("agree" if agree else "disagree")
        )
    return report
