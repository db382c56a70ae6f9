"""
權重向量 ω 與基底平移 𝕕 的選擇
"""

import logging
from fractions import Fraction
from itertools import product
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

from ..gb import GroebnerBasis, UncertifiedBasisError
from ..poly import FreeElem, Monomial
from .lp import DegenerationError, InfeasibleError, UnboundedError, solve_lp

logger = logging.getLogger(__name__)

DEFAULT_SEARCH_BOX = 6


def _gens(G) -> Tuple[FreeElem, ...]:
    if isinstance(G, GroebnerBasis):
        if not G.certified:
            raise UncertifiedBasisError("權重向量需要已認證的 Gröbner 基")
        return G.gens
    return tuple(G)


def lead_differences(gens: Sequence[FreeElem]) -> List[Tuple[int, ...]]:
    """每個生成元的首單項式減去同基底其他單項式的指數差 n − m（去重、排序）"""
    diffs = set()
    for g in gens:
        lead = g.leading_term()
        for t in g.terms[1:]:
            if t.basis == lead.basis:
                diffs.add(tuple(a - b for a, b in zip(lead.mono, t.mono)))
    return sorted(diffs)


def satisfies(omega: Sequence[int], diffs: Sequence[Sequence[int]]) -> bool:
    return all(w > 0 for w in omega) and all(
        sum(w * d for w, d in zip(omega, diff)) > 0 for diff in diffs)


def _integral(solution: Sequence[Fraction]) -> Tuple[int, ...]:
    scale = 1
    for v in solution:
        scale = lcm(scale, v.denominator)
    ints = [int(v * scale) for v in solution]
    common = 0
    for v in ints:
        common = gcd(common, v)
    return tuple(v // common for v in ints) if common > 1 else tuple(ints)


def _box_search(nvars: int, diffs, box: int) -> Optional[Tuple[int, ...]]:
    for omega in product(range(1, box + 1), repeat=nvars):
        if satisfies(omega, diffs):
            return omega
    return None


def weight_vector(G, search_box: int = DEFAULT_SEARCH_BOX) -> Tuple[int, ...]:
    """
    求正整數權重 ω，使每個生成元的首項在同基底內 ω-次數嚴格最大

    以精確線性規劃解 ω·(n − m) ≥ 1、ω ≥ 1，最小化 Σω 後約成最小正整數向量；
    線性規劃失敗時（r ≤ 4）退回小範圍窮舉。

    Args:
        G: 已認證的 GroebnerBasis 或生成元序列
        search_box: 窮舉時每個分量的上界

    Returns:
        tuple: ω

    Raises:
        DegenerationError: 找不到可行的 ω（單項式序下不應發生）

    Example:
        >>> weight_vector(buchberger([x - y]))   # lex x > y
        (2, 1)
    """
    gens = _gens(G)
    if not gens:
        raise DegenerationError("空的 Gröbner 基沒有權重向量可言")
    nvars = gens[0].module.nvars
    diffs = lead_differences(gens)
    if not diffs:
        return (1,) * nvars

    # ω = 1 + u，u ≥ 0：u·diff ≥ 1 − Σdiff
    A = [[Fraction(d) for d in diff] for diff in diffs]
    b = [Fraction(1 - sum(diff)) for diff in diffs]
    c = [Fraction(1)] * nvars
    omega: Optional[Tuple[int, ...]] = None
    try:
        u = solve_lp(A, b, c)
        omega = _integral([1 + v for v in u])
    except (InfeasibleError, UnboundedError) as e:
        logger.warning("線性規劃求權重失敗：%s", e)
        if nvars <= 4:
            omega = _box_search(nvars, diffs, search_box)

    if omega is None or not satisfies(omega, diffs):
        raise DegenerationError("找不到使首項嚴格最大的權重向量（內部錯誤）")
    logger.info("權重向量 ω = %s（%d 條限制）", omega, len(diffs))
    return omega


def degree_spread(gens: Sequence[FreeElem], omega: Sequence[int]) -> int:
    """B = 各生成元內 ω-次數的最大差"""
    spread = 0
    for g in gens:
        degrees = [sum(w * e for w, e in zip(omega, t.mono)) for t in g.terms]
        if degrees:
            spread = max(spread, max(degrees) - min(degrees))
    return spread


def shift_vector(G, omega: Sequence[int]) -> Tuple[int, ...]:
    """
    基底平移 d_k = (ℓ − k + 1)·(B + 1)

    平移嚴格遞減且間距大於 B，使跨基底的首項選擇與 position-over-term 一致。
    """
    gens = _gens(G)
    if isinstance(G, GroebnerBasis):
        rank = G.module.rank
    elif gens:
        rank = gens[0].module.rank
    else:
        rank = 1
    step = degree_spread(gens, omega) + 1
    return tuple((rank - k + 1) * step for k in range(1, rank + 1))


def weighted_degree(mono: Monomial, basis: int, omega: Sequence[int],
                    shifts: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(omega, mono)) + shifts[basis - 1]
