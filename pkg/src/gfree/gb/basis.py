"""
Gröbner 基資料結構與例外
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..poly import FreeElem, FreeModule, OrderSpec, Term


class GroebnerError(Exception):
    """Gröbner 基計算錯誤"""
    pass


class FuelExhaustedError(GroebnerError):
    """配對化簡次數超過上限"""

    def __init__(self, fuel: int, basis_size: int):
        self.fuel = fuel
        self.basis_size = basis_size
        super().__init__(f"配對化簡次數超過上限 {fuel}（目前基大小 {basis_size}）")


class UncertifiedBasisError(GroebnerError):
    """需要已認證的 Gröbner 基"""
    pass


@dataclass
class GroebnerBasis:
    """
    自由模子模的生成元與其首項

    Attributes:
        module: 所在的自由模（含單項式序）
        gens: 生成元（非零、單位正規化、互不相同）
        certified: 只有在 is_groebner 通過後才為 True
        stats: 計算統計（配對數、化簡為零次數等）
    """

    module: FreeModule
    gens: Tuple[FreeElem, ...]
    certified: bool = False
    stats: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self.gens = tuple(self.gens)
        for g in self.gens:
            if g.is_zero:
                raise GroebnerError("Gröbner 基不可包含零元素")
            if g.module != self.module:
                raise GroebnerError("生成元所屬的自由模與基不一致")

    @classmethod
    def candidate(cls, gens: Sequence[FreeElem], module: FreeModule = None) -> "GroebnerBasis":
        """未認證的候選基（供 is_groebner 檢查）"""
        gens = [g for g in gens if not g.is_zero]
        if module is None:
            if not gens:
                raise GroebnerError("空生成元列表需指定 module")
            module = gens[0].module
        return cls(module, tuple(gens), certified=False)

    @property
    def order(self) -> OrderSpec:
        return self.module.order

    @property
    def initial_terms(self) -> List[Term]:
        return [g.leading_term() for g in self.gens]

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def records(self) -> List[Tuple[str, str]]:
        rows = [
            ("gb.ring", str(self.module.domain)),
            ("gb.order", str(self.order)),
            ("gb.size", str(len(self.gens))),
            ("gb.certified", str(self.certified).lower()),
        ]
        for i, g in enumerate(self.gens, 1):
            rows.append((f"gb.gen.{i}", str(g)))
        for i, t in enumerate(self.initial_terms, 1):
            rows.append((f"gb.initial.{i}", str(FreeElem(self.module, [t]))))
        for name in sorted(self.stats):
            rows.append((f"gb.stats.{name}", str(self.stats[name])))
        return rows
