"""Exact arithmetic foundations over prime fields."""
from .fp import FpElem, check_prime, inv_mod, is_prime
from .laurent import LaurentSeries, laurent_expand
from .plfunc import PLFunction, pl_eval, pl_from_points, pl_invert
from .poly import Place, Poly, RatFunc, rational_roots, valuation

__all__ = [
    "FpElem", "check_prime", "inv_mod", "is_prime",
    "LaurentSeries", "laurent_expand",
    "PLFunction", "pl_eval", "pl_from_points", "pl_invert",
    "Place", "Poly", "RatFunc", "rational_roots", "valuation",
]
