"""
多項式與自由模模組

提供單項式、項、自由模元素、單項式序（含 position-over-term 擴張與權重細化）
以及正分次。
"""

from .monomial import (
    Monomial,
    format_monomial,
    is_squarefree,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    mono_one,
    mono_pow,
    monomials_of_degree,
)
from .order import BaseOrder, OrderError, OrderSpec, PolyError, compare
from .grading import Grading, GradingError, graded_degree
from .element import (
    FreeElem,
    FreeModule,
    Term,
    format_coefficient,
    format_element,
    leading_term,
)

__all__ = [
    "Monomial",
    "format_monomial",
    "is_squarefree",
    "mono_degree",
    "mono_div",
    "mono_divides",
    "mono_lcm",
    "mono_mul",
    "mono_one",
    "mono_pow",
    "monomials_of_degree",
    "BaseOrder",
    "OrderError",
    "OrderSpec",
    "PolyError",
    "compare",
    "Grading",
    "GradingError",
    "graded_degree",
    "FreeElem",
    "FreeModule",
    "Term",
    "format_coefficient",
    "format_element",
    "leading_term",
]
