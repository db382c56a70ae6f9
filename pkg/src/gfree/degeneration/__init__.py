"""
平坦退化模組

權重向量 ω（精確線性規劃）、基底平移 𝕕、(ω,𝕕)-齊次化，
以及 t=0／t=1 兩端 fiber 的檢查。
"""

from .lp import DegenerationError, InfeasibleError, UnboundedError, solve_lp
from .weights import (
    DEFAULT_SEARCH_BOX,
    degree_spread,
    lead_differences,
    satisfies,
    shift_vector,
    weight_vector,
    weighted_degree,
)
from .homogenize import (
    DegenerationData,
    DegenerationReport,
    at_t,
    degenerate,
    degeneration_check,
    degeneration_gradings,
    fresh_variable,
    homogenize,
    homogenize_element,
)

__all__ = [
    "DegenerationError",
    "InfeasibleError",
    "UnboundedError",
    "solve_lp",
    "DEFAULT_SEARCH_BOX",
    "degree_spread",
    "lead_differences",
    "satisfies",
    "shift_vector",
    "weight_vector",
    "weighted_degree",
    "DegenerationData",
    "DegenerationReport",
    "at_t",
    "degenerate",
    "degeneration_check",
    "degeneration_gradings",
    "fresh_variable",
    "homogenize",
    "homogenize_element",
]
