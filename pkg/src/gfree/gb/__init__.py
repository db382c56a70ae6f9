"""
Gröbner 基模組

在 Euclidean 係數環上的自由模中做化簡、計算項 syzygy、
以 Buchberger 演算法補全並判定 Gröbner 基。
"""

from .basis import FuelExhaustedError, GroebnerBasis, GroebnerError, UncertifiedBasisError
from .reduction import (
    ReductionTrace,
    Syzygy,
    normal_form,
    reduce,
    s_vector,
    term_in_module,
    term_syzygies,
)
from .buchberger import (
    DEFAULT_FUEL,
    CertificationResult,
    buchberger,
    certify,
    check_groebner,
    initial_module,
    is_groebner,
    unit_normalize,
)

__all__ = [
    "FuelExhaustedError",
    "GroebnerBasis",
    "GroebnerError",
    "UncertifiedBasisError",
    "ReductionTrace",
    "Syzygy",
    "normal_form",
    "reduce",
    "s_vector",
    "term_in_module",
    "term_syzygies",
    "DEFAULT_FUEL",
    "CertificationResult",
    "buchberger",
    "certify",
    "check_groebner",
    "initial_module",
    "is_groebner",
    "unit_normalize",
]
