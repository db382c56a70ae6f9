"""
行列式理想模組

建立係數矩陣 (a_ij x_ij) 的 t-minor 實例，計算 witness 並驗證 generic freeness。
"""

from .instance import (
    AntidiagonalComplement,
    DeterminantalError,
    DetInstance,
    antidiagonal_complement,
    antidiagonal_module,
    antidiagonal_term,
    build_instance,
    det_witness,
    minor,
    variable_name,
)
from .verify import DetReport, unit_table, verify_instance

__all__ = [
    "AntidiagonalComplement",
    "DeterminantalError",
    "DetInstance",
    "antidiagonal_complement",
    "antidiagonal_module",
    "antidiagonal_term",
    "build_instance",
    "det_witness",
    "minor",
    "variable_name",
    "DetReport",
    "unit_table",
    "verify_instance",
]
