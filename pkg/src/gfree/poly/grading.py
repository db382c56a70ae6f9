"""
正分次（positive grading）與基底平移
"""

from dataclasses import dataclass
from typing import Iterator, Tuple

from .monomial import Monomial, monomials_of_degree
from .order import PolyError


class GradingError(PolyError):
    """分次設定錯誤"""
    pass


@dataclass(frozen=True)
class Grading:
    """
    變數權重 δ_i > 0 與基底平移 d_k

    basis_shifts 為空時視為全部 0。
    """

    var_weights: Tuple[int, ...]
    basis_shifts: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "var_weights", tuple(self.var_weights))
        object.__setattr__(self, "basis_shifts", tuple(self.basis_shifts))
        if any(w <= 0 for w in self.var_weights):
            raise GradingError(f"變數權重必須為正整數: {self.var_weights}")

    @classmethod
    def standard(cls, nvars: int, rank: int = 1) -> "Grading":
        return cls((1,) * nvars, (0,) * rank)

    def shift(self, basis: int) -> int:
        if not self.basis_shifts:
            return 0
        if not 1 <= basis <= len(self.basis_shifts):
            raise GradingError(f"基底索引 {basis} 超出平移長度 {len(self.basis_shifts)}")
        return self.basis_shifts[basis - 1]

    def degree(self, mono: Monomial, basis: int = 1) -> int:
        if len(mono) != len(self.var_weights):
            raise GradingError(
                f"單項式維度 {len(mono)} 與分次權重 {len(self.var_weights)} 不符"
            )
        return sum(w * e for w, e in zip(self.var_weights, mono)) + self.shift(basis)

    def basis_monomials(self, rank: int, degree: int) -> Iterator[Tuple[Monomial, int]]:
        """列舉自由模中分次次數恰為 degree 的所有 (monomial, basis)"""
        for basis in range(1, rank + 1):
            for mono in monomials_of_degree(self.var_weights, degree - self.shift(basis)):
                yield mono, basis


def graded_degree(term, grading: Grading) -> int:
    """項的分次次數 δ·n + d_k"""
    return grading.degree(tuple(term.mono), term.basis)
