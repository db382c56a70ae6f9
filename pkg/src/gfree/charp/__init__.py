"""
正特徵模組

Frobenius 冪與初始模交換性的檢查，以及初始理想 square-free 時的局部上同調自由性報告。
"""

from .frobenius import (
    CharacteristicError,
    CharpError,
    FrobeniusReport,
    frobenius_initial_check,
    frobenius_power,
    frobenius_term,
    same_term_module,
)
from .squarefree import CONCLUSION, HomogeneityError, SquarefreeReport, squarefree_report

__all__ = [
    "CharacteristicError",
    "CharpError",
    "FrobeniusReport",
    "frobenius_initial_check",
    "frobenius_power",
    "frobenius_term",
    "same_term_module",
    "CONCLUSION",
    "HomogeneityError",
    "SquarefreeReport",
    "squarefree_report",
]
