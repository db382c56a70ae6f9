"""
gfree - 係數環上的 Gröbner 基與有效 generic freeness 工具組

在 Euclidean 係數環（ℤ、ℚ、𝔽_p、𝔽_p[t]、ℚ[t]）上的自由模中計算 Gröbner 基，
取出使 F/M 局部化後成為自由模的 witness，並提供標準單項式、Hilbert 表、
fiber 比較、平坦退化、Frobenius 冪與行列式實例的檢查。
"""

__version__ = "1.0.0"
__author__ = "gfree contributors"

from .coeff import IntegerDomain, PrimeFieldDomain, RationalDomain, UnivariatePolyDomain
from .poly import FreeElem, FreeModule, Grading, OrderSpec
from .gb import GroebnerBasis, buchberger, is_groebner, reduce
from .freeness import Witness, hilbert_function, standard_monomials, witness

__all__ = [
    "IntegerDomain",
    "PrimeFieldDomain",
    "RationalDomain",
    "UnivariatePolyDomain",
    "FreeElem",
    "FreeModule",
    "Grading",
    "OrderSpec",
    "GroebnerBasis",
    "buchberger",
    "is_groebner",
    "reduce",
    "Witness",
    "hilbert_function",
    "standard_monomials",
    "witness",
]
