"""Exact Witt vector arithmetic, ramification data and stacky curves in characteristic p."""
from .asw import asw_reduce, is_admissible, local_witt, upper_jumps
from .config import Config, get_config, set_config
from .cover import CoverSpec, analyze_cover, branch_places, quotient_report
from .errors import DomainError, WittstackError
from .filtration import (Filtration, filtration_from_lower, filtration_from_upper,
                         lower_to_upper, phi_from_filtration, upper_to_lower)
from .garuti import TowerDivisor, boundary, boundary_closed_form
from .stacky import (StackyCurveData, StackyPoint, canonical_divisor, canring_generators,
                     genus, h0, hilbert_table)
from .witt import WittVector, frobenius, gen_witt_polys, to_zpn, verschiebung, wp

__version__ = "0.1.0"

__all__ = [
    "asw_reduce", "is_admissible", "local_witt", "upper_jumps",
    "Config", "get_config", "set_config",
    "CoverSpec", "analyze_cover", "branch_places", "quotient_report",
    "DomainError", "WittstackError",
    "Filtration", "filtration_from_lower", "filtration_from_upper", "lower_to_upper",
    "phi_from_filtration", "upper_to_lower",
    "TowerDivisor", "boundary", "boundary_closed_form",
    "StackyCurveData", "StackyPoint", "canonical_divisor", "canring_generators", "genus", "h0",
    "hilbert_table",
    "WittVector", "frobenius", "gen_witt_polys", "to_zpn", "verschiebung", "wp",
]
