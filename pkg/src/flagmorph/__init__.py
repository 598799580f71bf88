"""Constancy and nonconstancy of morphisms from projective spaces to type-A flag varieties."""

from .chow import FlagVariety, blockify, dualize, presentation, schubert_generators
from .errors import DomainError
from .obstruction import (Outcome, Verdict, bounded_search, build_system, decide_flag_to_flag,
                          decide_pm_to_flag, decide_run)
from .polyring import DEFAULT_RING, Polynomial, Ring, series_invert, truncate

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_RING", "DomainError", "FlagVariety", "Outcome", "Polynomial", "Ring", "Verdict",
    "blockify", "bounded_search", "build_system", "decide_flag_to_flag", "decide_pm_to_flag",
    "decide_run", "dualize", "presentation", "schubert_generators", "series_invert", "truncate",
]
