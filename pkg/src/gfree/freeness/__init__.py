"""
Generic freeness 模組

witness 取出、標準單項式（generic Macaulay 基底）、分次 Hilbert 函數，
以及特化到剩餘體後的 fiber 比較。
"""

from .witness import (
    GUARANTEE,
    FreenessError,
    LocalizationError,
    Witness,
    group_gcds,
    witness,
)
from .standard import HilbertTable, free_table, hilbert_function, standard_monomials
from .specialization import (
    SpecializationError,
    SpecializationPoint,
    SpecializedGens,
    default_points,
    parse_point,
    specialize,
)
from .fibers import (
    NO_GUARANTEE,
    FiberReport,
    FiberResult,
    fiber_compare,
    fiber_table,
    generic_table,
)

__all__ = [
    "GUARANTEE",
    "FreenessError",
    "LocalizationError",
    "Witness",
    "group_gcds",
    "witness",
    "HilbertTable",
    "free_table",
    "hilbert_function",
    "standard_monomials",
    "SpecializationError",
    "SpecializationPoint",
    "SpecializedGens",
    "default_points",
    "parse_point",
    "specialize",
    "NO_GUARANTEE",
    "FiberReport",
    "FiberResult",
    "fiber_compare",
    "fiber_table",
    "generic_table",
]
