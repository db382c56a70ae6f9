"""
標準單項式與 Hilbert 函數

反轉 witness 後初始模成為單項式子模，F/M ⊗ A_a 的各分次部分是自由模，
其秩即該次數中不被任何首單項式整除的單項式個數。
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..coeff import strip_witness
from ..poly import Grading, GradingError, Monomial, OrderSpec, Term
from .witness import FreenessError, LocalizationError, Witness, group_gcds


@dataclass
class HilbertTable:
    """次數 ν → 秩"""

    ranks: Dict[int, int]
    grading: Grading = None
    label: str = "hilbert"

    def __post_init__(self):
        self.ranks = dict(sorted(self.ranks.items()))

    def as_tuple(self) -> Tuple[int, ...]:
        return tuple(self.ranks.values())

    def differing_degrees(self, other: "HilbertTable") -> List[int]:
        degrees = sorted(set(self.ranks) | set(other.ranks))
        return [nu for nu in degrees if self.ranks.get(nu) != other.ranks.get(nu)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertTable):
            return NotImplemented
        return self.ranks == other.ranks

    def records(self) -> List[Tuple[str, str]]:
        return [(f"{self.label}.{nu}", str(rank)) for nu, rank in self.ranks.items()]


def _check_localized(initials: Sequence[Term], witness: Optional[Witness]) -> None:
    """反轉 witness 後每個首項所在組的係數 gcd 必須可逆"""
    for term, g in zip(initials, group_gcds(initials)):
        core = g if witness is None else strip_witness(g, witness.value)[0]
        if not core.is_unit:
            where = "" if witness is None else f"（witness {witness.value}）"
            raise LocalizationError(f"首項 {term.coeff}·{term.mono} 的係數在局部化後不可逆{where}")


def _rank_of(grading: Grading, rank: Optional[int]) -> int:
    if rank is not None:
        return rank
    return max(1, len(grading.basis_shifts))


def _is_standard(mono: Monomial, basis: int, initials: Sequence[Term]) -> bool:
    return not any(t.basis == basis and all(a <= b for a, b in zip(t.mono, mono))
                   for t in initials)


def standard_monomials(initials: Sequence[Term],
                       witness: Optional[Witness],
                       bound: int,
                       grading: Grading,
                       rank: Optional[int] = None,
                       order: Optional[OrderSpec] = None) -> List[Tuple[Monomial, int]]:
    """
    分次次數 ≤ bound 的標準單項式 x^n e_k

    Args:
        initials: Gröbner 基的首項
        witness: freeness witness（None 表示係數環為體或首係數皆為單位）
        bound: 次數上界 D
        grading: 正分次（含基底平移）
        rank: 自由模秩（預設由 grading 的平移長度推得）
        order: 同次數內的排序（由大到小），預設 lex

    Returns:
        list: (monomial, basis)，依次數遞增、同次數內依序由大到小

    Raises:
        LocalizationError: 反轉 witness 後仍有首係數不可逆
    """
    _check_localized(initials, witness)
    rank = _rank_of(grading, rank)
    order = order or OrderSpec()
    lo = min([0] + [grading.shift(k) for k in range(1, rank + 1)])
    result = []
    for nu in range(lo, bound + 1):
        level = [(mono, basis) for mono, basis in grading.basis_monomials(rank, nu)
                 if _is_standard(mono, basis, initials)]
        level.sort(key=lambda mb: order.key(*mb), reverse=True)
        result.extend(level)
    return result


def hilbert_function(initials: Sequence[Term],
                     grading: Grading,
                     nu_range: Tuple[int, int],
                     rank: Optional[int] = None,
                     witness: Optional[Witness] = None,
                     label: str = "hilbert") -> HilbertTable:
    """
    計算 F/in(M) ⊗ A_a 在 ν₀..ν₁ 的各分次秩

    Args:
        initials: 首項（反轉 witness 後係數為單位）
        grading: 正分次
        nu_range: (ν₀, ν₁)，含端點
        rank: 自由模秩
        witness: 用於驗證首係數可逆；None 時首係數本身必須可逆

    Raises:
        GradingError: 變數權重非正
        LocalizationError: 首係數不可逆
    """
    if any(w <= 0 for w in grading.var_weights):
        raise GradingError(f"變數權重必須為正整數: {grading.var_weights}")
    lo, hi = nu_range
    if lo > hi:
        raise FreenessError(f"次數範圍無效: {nu_range}")
    _check_localized(initials, witness)
    rank = _rank_of(grading, rank)
    ranks = {}
    for nu in range(lo, hi + 1):
        ranks[nu] = sum(1 for mono, basis in grading.basis_monomials(rank, nu)
                        if _is_standard(mono, basis, initials))
    return HilbertTable(ranks, grading, label)


def free_table(grading: Grading, nu_range: Tuple[int, int], rank: Optional[int] = None,
               label: str = "hilbert") -> HilbertTable:
    """沒有任何關係時（M = 0）的 Hilbert 表"""
    return hilbert_function([], grading, nu_range, rank, label=label)
