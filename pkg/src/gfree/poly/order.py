"""
單項式序與自由模上的 position-over-term 擴張

OrderSpec 把 (monomial, basis) 轉成可直接比較的排序鍵：
鍵越大者越大。比較順序依序為：
1. 權重細化（若有）：ω·n + d_k
2. 基底位置：e_1 > e_2 > … > e_ℓ
3. 基本單項式序（lex / grlex / grevlex，作用於排列後的變數）
4. 未列入排列的變數（例如齊次化新增的 t）依 lex
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

from .monomial import Monomial


class PolyError(ValueError):
    """多項式／自由模運算錯誤"""
    pass


class OrderError(PolyError):
    """單項式序設定或維度錯誤"""
    pass


class BaseOrder(Enum):
    """基本單項式序"""
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


@dataclass(frozen=True)
class OrderSpec:
    """
    自由模上的單項式序

    Attributes:
        base: 基本單項式序
        permutation: 變數重要性順序（索引由大到小）；None 表示宣告順序
        weights: 權重向量 ω（先比較加權次數）
        shifts: 基底平移 d_k，只在有 weights 時參與比較

    Example:
        >>> order = OrderSpec(BaseOrder.LEX)
        >>> order.key((2, 1), 1) > order.key((1, 2), 1)
        True
    """

    base: BaseOrder = BaseOrder.LEX
    permutation: Optional[Tuple[int, ...]] = None
    weights: Optional[Tuple[int, ...]] = None
    shifts: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.permutation is not None:
            perm = tuple(self.permutation)
            if len(set(perm)) != len(perm) or any(i < 0 for i in perm):
                raise OrderError(f"變數排列無效: {perm}")
            object.__setattr__(self, "permutation", perm)
        if self.weights is not None:
            weights = tuple(self.weights)
            if any(w < 0 for w in weights):
                raise OrderError(f"權重必須非負: {weights}")
            object.__setattr__(self, "weights", weights)
        if self.shifts is not None:
            object.__setattr__(self, "shifts", tuple(self.shifts))

    def validate(self, nvars: int, rank: int = 1) -> None:
        """
        檢查序與環維度是否一致

        Raises:
            OrderError: 排列、權重或平移的長度不符
        """
        if self.permutation is not None:
            if len(self.permutation) > nvars or any(i >= nvars for i in self.permutation):
                raise OrderError(f"變數排列 {self.permutation} 超出 {nvars} 個變數")
        if self.weights is not None and len(self.weights) != nvars:
            raise OrderError(f"權重長度 {len(self.weights)} 與變數數 {nvars} 不符")
        if self.shifts is not None and len(self.shifts) != rank:
            raise OrderError(f"平移長度 {len(self.shifts)} 與模秩 {rank} 不符")

    def with_weights(self, weights, shifts=None) -> "OrderSpec":
        return OrderSpec(self.base, self.permutation, tuple(weights),
                         None if shifts is None else tuple(shifts))

    def key(self, mono: Monomial, basis: int = 1) -> tuple:
        return _order_key(self, mono, basis)

    def __str__(self) -> str:
        parts = [self.base.value]
        if self.permutation is not None:
            parts.append("perm=" + ",".join(map(str, self.permutation)))
        if self.weights is not None:
            parts.append("weights=" + ",".join(map(str, self.weights)))
        if self.shifts is not None:
            parts.append("shifts=" + ",".join(map(str, self.shifts)))
        return " ".join(parts)


@lru_cache(maxsize=1 << 16)
def _order_key(order: OrderSpec, mono: Monomial, basis: int) -> tuple:
    perm = order.permutation
    if perm is None:
        perm = tuple(range(len(mono)))
    permuted = tuple(mono[i] for i in perm)
    in_perm = set(perm)
    rest = tuple(e for i, e in enumerate(mono) if i not in in_perm)

    prefix: tuple = ()
    if order.weights is not None:
        shift = order.shifts[basis - 1] if order.shifts is not None else 0
        prefix = (sum(w * e for w, e in zip(order.weights, mono)) + shift,)

    if order.base is BaseOrder.LEX:
        body = permuted
    elif order.base is BaseOrder.GRLEX:
        body = (sum(permuted),) + permuted
    else:
        body = (sum(permuted),) + tuple(-e for e in reversed(permuted))
    return prefix + (-basis,) + body + rest


def compare(order: OrderSpec, s, t) -> int:
    """
    比較兩個項（只看 monomial 與 basis，忽略係數）

    Args:
        order: 單項式序
        s, t: Term 或 (monomial, basis) 配對

    Returns:
        int: s > t 為 1，相等為 0，s < t 為 -1

    Raises:
        OrderError: 兩者維度不一致
    """
    s_mono, s_basis = _unpack(s)
    t_mono, t_basis = _unpack(t)
    if len(s_mono) != len(t_mono):
        raise OrderError(f"單項式維度不一致: {len(s_mono)} 與 {len(t_mono)}")
    ks, kt = order.key(s_mono, s_basis), order.key(t_mono, t_basis)
    return (ks > kt) - (ks < kt)


def _unpack(item) -> Tuple[Monomial, int]:
    if hasattr(item, "mono"):
        return tuple(item.mono), item.basis
    mono, basis = item
    return tuple(mono), basis
