"""
化簡（weak reduction）與項 syzygy

化簡由上而下處理：每一步取目前最大的項 c·μ·e_k，收集單項式整除它的首項
（基底相同）。若某個首係數整除 c，取索引最小者；否則以 Bézout 連鎖把 c
寫成首係數的組合。c 不在首係數生成的理想中時，該項移入餘式。
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..coeff import RingElem, bezout_cascade, gcd
from ..poly import FreeElem, Term, mono_div, mono_lcm
from .basis import GroebnerBasis, GroebnerError

logger = logging.getLogger(__name__)


@dataclass
class ReductionTrace:
    """
    化簡紀錄：input = Σ multiplier_i · gens[index_i] + remainder

    Attributes:
        quotients: (生成元索引, 多項式乘數) 列表，依索引排序
        remainder: 餘式 z
        steps: 化簡步數
    """

    quotients: List[Tuple[int, FreeElem]]
    remainder: FreeElem
    steps: int = 0

    def recombine(self, gens: Sequence[FreeElem]) -> FreeElem:
        total = self.remainder
        for index, multiplier in self.quotients:
            total = total + gens[index].mul_poly(multiplier)
        return total

    def verify(self, w: FreeElem, gens: Sequence[FreeElem]) -> bool:
        """重新展開檢查化簡恆等式與首項不增"""
        if self.recombine(gens) != w:
            return False
        if w.is_zero:
            return all(m.is_zero for _, m in self.quotients)
        top = w.module.key(*w.leading_term().key)
        for index, multiplier in self.quotients:
            product = gens[index].mul_poly(multiplier)
            if product and w.module.key(*product.leading_term().key) > top:
                return False
        return True

    def records(self) -> List[Tuple[str, str]]:
        rows = [("reduce.remainder", str(self.remainder)),
                ("reduce.zero", str(self.remainder.is_zero).lower()),
                ("reduce.steps", str(self.steps))]
        for index, multiplier in self.quotients:
            rows.append((f"reduce.quotient.{index + 1}", str(multiplier)))
        return rows


def _gens_of(G) -> Tuple[FreeElem, ...]:
    if isinstance(G, GroebnerBasis):
        return G.gens
    return tuple(G)


def reduce(w: FreeElem, G, check: bool = False) -> ReductionTrace:
    """
    把 w 對生成元 G 做完全（全項）化簡

    Args:
        w: 待化簡元素
        G: GroebnerBasis 或 FreeElem 序列（不必已認證）
        check: 結束時重新展開驗證化簡恆等式

    Returns:
        ReductionTrace: 商與餘式；餘式沒有任何項的係數落在可用首係數生成的理想中

    Raises:
        GroebnerError: 元素所屬的模或單項式序不一致，或驗證失敗

    Example:
        >>> trace = reduce(f, [g])   # f = 2x+y, g = x-y over ZZ
        >>> str(trace.remainder)
        '3*y'
    """
    gens = _gens_of(G)
    module = w.module
    for g in gens:
        if g.module != module:
            raise GroebnerError("待化簡元素與生成元的自由模或單項式序不一致")
        if g.is_zero:
            raise GroebnerError("生成元不可為零")

    leads = [g.leading_term() for g in gens]
    ring = module.ring()
    quotient_terms: Dict[int, List[Term]] = {}
    remainder: List[Term] = []
    p = w
    steps = 0

    while p:
        lt = p.leading_term()
        applicable = [i for i, lead in enumerate(leads) if lead.divides(lt)]
        combination = _combination(lt.coeff, [leads[i].coeff for i in applicable])
        if combination is None:
            remainder.append(lt)
            p = FreeElem(module, p.terms[1:])
            continue
        subtract = []
        for i, c in zip(applicable, combination):
            if c.is_zero:
                continue
            mu = mono_div(lt.mono, leads[i].mono)
            quotient_terms.setdefault(i, []).append(Term(c, mu, 1))
            subtract.extend(t.times(c, mu) for t in gens[i].terms)
        p = p - FreeElem(module, subtract)
        steps += 1

    trace = ReductionTrace(
        quotients=[(i, FreeElem(ring, quotient_terms[i])) for i in sorted(quotient_terms)],
        remainder=FreeElem(module, remainder),
        steps=steps,
    )
    logger.debug("化簡完成：%d 步，餘式 %d 項", steps, len(remainder))
    if check and not trace.verify(w, gens):
        raise GroebnerError(f"化簡恆等式驗證失敗: {w}")
    return trace


def _combination(c: RingElem, lead_coeffs: List[RingElem]) -> Optional[List[RingElem]]:
    """c = Σ u_j · lead_coeffs[j] 的係數；c 不在理想中時回傳 None"""
    if not lead_coeffs:
        return None
    zero = c.domain.zero()
    for j, a in enumerate(lead_coeffs):
        q = c.try_exquo(a)
        if q is not None:
            return [q if k == j else zero for k in range(len(lead_coeffs))]
    g, multipliers = bezout_cascade(lead_coeffs)
    q = c.try_exquo(g)
    if q is None:
        return None
    return [q * u for u in multipliers]


def normal_form(w: FreeElem, G) -> FreeElem:
    return reduce(w, G).remainder


class Syzygy(NamedTuple):
    """首項 i、j 之間的 syzygy：left·in(w_i) + right·in(w_j) = 0"""
    i: int
    j: int
    left: Term
    right: Term


def term_syzygies(terms: Sequence[Term]) -> List[Syzygy]:
    """
    兩兩配對的項 syzygy（只配對基底相同者）

    對 i < j，g = gcd(c_i, c_j)、L = lcm(m_i, m_j)，回傳
    ((c_j/g)·(L/m_i), −(c_i/g)·(L/m_j))。在 PID 上這些向量生成全部項 syzygy。

    Raises:
        GroebnerError: 含有零項
    """
    syzygies = []
    for term in terms:
        if term is None or term.coeff.is_zero:
            raise GroebnerError("term_syzygies 不接受零項")
    for j in range(len(terms)):
        for i in range(j):
            syz = pair_syzygy(terms, i, j)
            if syz is not None:
                syzygies.append(syz)
    syzygies.sort(key=lambda s: (s.i, s.j))
    return syzygies


def pair_syzygy(terms: Sequence[Term], i: int, j: int) -> Optional[Syzygy]:
    ti, tj = terms[i], terms[j]
    if ti.basis != tj.basis:
        return None
    g = gcd(ti.coeff, tj.coeff)
    L = mono_lcm(ti.mono, tj.mono)
    left = Term(tj.coeff.exquo(g), mono_div(L, ti.mono), 1)
    right = Term(-(ti.coeff.exquo(g)), mono_div(L, tj.mono), 1)
    return Syzygy(i, j, left, right)


def s_vector(gens: Sequence[FreeElem], syz: Syzygy) -> FreeElem:
    """把 syzygy 套用到生成元上"""
    wi, wj = gens[syz.i], gens[syz.j]
    return wi.mul_term(syz.left.coeff, syz.left.mono) + wj.mul_term(syz.right.coeff, syz.right.mono)


def lcm_key(terms: Sequence[Term], syz: Syzygy, module) -> tuple:
    """配對的選擇鍵：lcm 單項式在序中的位置（小者優先）"""
    ti = terms[syz.i]
    return module.key(tuple(a + b for a, b in zip(ti.mono, syz.left.mono)), ti.basis)


def term_in_module(term: Term, initials: Sequence[Term]) -> bool:
    """
    項 c·μ·e_k 是否屬於項 {a_i m_i e_{k_i}} 生成的子模

    等價於 c 屬於 {a_i : m_i | μ, k_i = k} 生成的理想。
    """
    coeffs = [t.coeff for t in initials if t.divides(term)]
    if not coeffs:
        return False
    g, _ = bezout_cascade(coeffs)
    return g.divides(term.coeff)
