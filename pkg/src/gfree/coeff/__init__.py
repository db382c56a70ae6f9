"""
係數運算模組

提供 Euclidean 係數環 A（ℤ、ℚ、𝔽_p、𝔽_p[t]、ℚ[t]）與局部化 A_a 的精確運算：
- 擴展 gcd、lcm
- witness 因子剝除（strip_witness）
- Bézout 連鎖
"""

from .domain import (
    CoeffDomain,
    CoeffError,
    DomainKind,
    DomainMismatchError,
    IntegerDomain,
    PrimeFieldDomain,
    RationalDomain,
    RingElem,
    UnivariatePolyDomain,
    make_domain,
)
from .arithmetic import (
    bezout_cascade,
    ext_gcd,
    gcd,
    lcm,
    lcm_many,
    strip_witness,
    strip_witness_parts,
)
from .localization import LocalizedDomain, LocalizedElem

__all__ = [
    "CoeffDomain",
    "CoeffError",
    "DomainKind",
    "DomainMismatchError",
    "IntegerDomain",
    "PrimeFieldDomain",
    "RationalDomain",
    "RingElem",
    "UnivariatePolyDomain",
    "make_domain",
    "bezout_cascade",
    "ext_gcd",
    "gcd",
    "lcm",
    "lcm_many",
    "strip_witness",
    "strip_witness_parts",
    "LocalizedDomain",
    "LocalizedElem",
]
