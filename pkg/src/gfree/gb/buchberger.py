"""
Buchberger 演算法與 Gröbner 基判定

判定準則：G 為 Gröbner 基若且唯若首項的兩兩項 syzygy 套用到 G 後都化簡為零。
配對以 normal strategy 處理（lcm 單項式最小者優先，再依索引），多餘配對以 Gebauer–Möller 準則略過。
"""

import heapq
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..coeff import bezout_cascade, gcd, lcm
from ..poly import FreeElem, FreeModule, OrderSpec, Term, mono_div, mono_lcm
from .basis import FuelExhaustedError, GroebnerBasis, GroebnerError, UncertifiedBasisError
from .reduction import (
    _gens_of,
    lcm_key,
    pair_syzygy,
    reduce,
    s_vector,
    term_in_module,
    term_syzygies,
)

logger = logging.getLogger(__name__)

DEFAULT_FUEL = 1_000_000


@dataclass
class CertificationResult:
    """is_groebner 的詳細結果（失敗時附上第一個不化簡為零的配對）"""

    ok: bool
    pair: Optional[Tuple[int, int]] = None
    remainder: Optional[FreeElem] = None
    checked: int = 0

    def records(self) -> List[Tuple[str, str]]:
        rows = [("check.groebner", str(self.ok).lower()),
                ("check.groebner.pairs", str(self.checked))]
        if self.pair is not None:
            rows.append(("check.groebner.pair", f"{self.pair[0] + 1},{self.pair[1] + 1}"))
            rows.append(("check.groebner.remainder", str(self.remainder)))
        return rows


def unit_normalize(w: FreeElem) -> FreeElem:
    """使首係數為正規形式（ℤ 為正、k[t] 為 monic、體為 1）"""
    if w.is_zero:
        return w
    unit = w.leading_term().coeff.unit_normal()
    return w if unit == w.domain.one() else w.scale(unit)


def _lead_key(w: FreeElem) -> tuple:
    return w.module.key(*w.leading_term().key)


def _prepare(gens: Sequence[FreeElem], module: FreeModule) -> List[FreeElem]:
    prepared: List[FreeElem] = []
    seen = set()
    for g in gens:
        if g.module != module:
            if (g.module.domain, g.module.variables, g.module.rank) != (
                    module.domain, module.variables, module.rank):
                raise GroebnerError("生成元所屬的自由模不一致")
            g = g.reorder(module)
        if g.is_zero:
            continue
        g = unit_normalize(g)
        if g in seen:
            continue
        seen.add(g)
        prepared.append(g)
    return prepared


class PairQueue:
    """
    Buchberger 的工作狀態：已產生的元素、目前的基與待處理配對

    配對的項 lcm 為 T_ij = lcm(c_i, c_j)·lcm(m_i, m_j)。加入新元素時以
    Gebauer–Möller 準則刪去多餘配對，並移除首項被新首項（含係數）整除的舊生成元，
    把它對新基化簡後的餘式重新加入。被移除的元素所屬的配對在取出時略過。
    """

    def __init__(self, module: FreeModule, fuel: int, used: int = 0):
        self.module = module
        self.fuel = fuel
        self.polys: List[FreeElem] = []
        self.leads: List[Term] = []
        self.active: List[int] = []
        self.removed: set = set()
        self.heap: list = []
        self.stats: Dict[str, int] = {
            "pairs": used,
            "zero_reductions": 0,
            "additions": 0,
            "pruned": 0,
            "replaced": 0,
        }

    @property
    def basis(self) -> List[FreeElem]:
        return [self.polys[k] for k in self.active]

    def add(self, w: FreeElem) -> None:
        worklist = [w]
        while worklist:
            h = unit_normalize(worklist.pop())
            n = len(self.polys)
            self.polys.append(h)
            self.leads.append(h.leading_term())
            displaced = [k for k in self.active if term_divides(self.leads[n], self.leads[k])]
            for k in displaced:
                self.active.remove(k)
                self.removed.add(k)
            self._update(n)
            self.active.append(n)
            for k in displaced:
                self.stats["replaced"] += 1
                remainder = reduce(self.polys[k], self.basis).remainder
                if remainder:
                    worklist.append(remainder)

    def _update(self, n: int) -> None:
        new = self.leads[n]
        candidates = []
        for i in self.active:
            if self.leads[i].basis == new.basis:
                candidates.append((i, term_lcm(self.leads[i], new)))

        # 既有配對：T_n | T_ij 且兩個新 lcm 都不等於 T_ij 時可刪
        lcm_with_new = dict(candidates)
        kept = []
        for entry in self.heap:
            _, i, j, _, t_ij = entry
            if (i not in self.removed and j not in self.removed
                    and term_divides(new, t_ij)
                    and lcm_with_new.get(i) != t_ij and lcm_with_new.get(j) != t_ij):
                self.stats["pruned"] += 1
                continue
            kept.append(entry)
        if len(kept) != len(self.heap):
            heapq.heapify(kept)
            self.heap = kept

        # 新配對：有真因子 lcm 者刪去，相同 lcm 只留一個
        survivors = []
        for i, t_in in candidates:
            if any(term_divides(t_kn, t_in) and t_kn != t_in for _, t_kn in candidates):
                self.stats["pruned"] += 1
                continue
            survivors.append((i, t_in))
        groups: Dict[Term, List[int]] = {}
        for i, t_in in survivors:
            groups.setdefault(t_in, []).append(i)
        for t_in, members in groups.items():
            if any(self._coprime(i, n) for i in members):
                self.stats["pruned"] += len(members)
                continue
            self.stats["pruned"] += len(members) - 1
            i = members[0]
            syz = pair_syzygy(self.leads, i, n)
            heapq.heappush(self.heap, (lcm_key(self.leads, syz, self.module), i, n, syz, t_in))

    def _coprime(self, i: int, j: int) -> bool:
        # 只對理想成立：首單項式互質且首係數互質時 S 向量有標準表示
        if self.module.rank != 1:
            return False
        a, b = self.leads[i], self.leads[j]
        if any(x and y for x, y in zip(a.mono, b.mono)):
            return False
        return gcd(a.coeff, b.coeff).is_unit

    def run(self) -> None:
        while self.heap:
            if self.stats["pairs"] >= self.fuel:
                raise FuelExhaustedError(self.fuel, len(self.active))
            _, i, j, syz, _ = heapq.heappop(self.heap)
            if i in self.removed or j in self.removed:
                continue
            self.stats["pairs"] += 1
            remainder = reduce(s_vector(self.polys, syz), self.basis).remainder
            if remainder.is_zero:
                self.stats["zero_reductions"] += 1
                continue
            self.stats["additions"] += 1
            logger.debug("配對 (%d, %d) 產生新元素 #%d: %s", i + 1, j + 1, len(self.polys) + 1, remainder)
            self.add(remainder)


def term_lcm(a: Term, b: Term) -> Term:
    """兩個同基底項的 lcm（係數取單位正規化的 lcm）"""
    return Term(lcm(a.coeff, b.coeff), mono_lcm(a.mono, b.mono), a.basis)


def term_divides(a: Term, b: Term) -> bool:
    """a | b：單項式、基底與係數都整除"""
    return a.divides(b) and a.coeff.divides(b.coeff)


def buchberger(gens: Sequence[FreeElem],
               order: Optional[OrderSpec] = None,
               module: Optional[FreeModule] = None,
               fuel: int = DEFAULT_FUEL,
               tail_reduce: bool = True) -> GroebnerBasis:
    """
    計算子模的 (weak) Gröbner 基

    Args:
        gens: 生成元
        order: 改用的單項式序（省略則沿用生成元所屬模的序）
        module: 生成元為空時必須提供
        fuel: 配對化簡次數上限
        tail_reduce: 是否做尾項互化簡

    Returns:
        GroebnerBasis: 已認證、單位正規化、互化簡、依首項由大到小排序

    Raises:
        FuelExhaustedError: 超過 fuel
        GroebnerError: 生成元不屬於同一自由模

    Example:
        >>> G = buchberger([2*x + y, 3*x])   # ZZ, lex x > y
        >>> [str(g) for g in G.gens]
        ['x - y', '3*y']
    """
    gens = list(gens)
    if module is None:
        if not gens:
            raise GroebnerError("空生成元列表需指定 module")
        module = gens[0].module
    if order is not None:
        module = module.with_order(order)

    pending = _prepare(gens, module)
    totals: Dict[str, int] = {}
    rounds = 0
    while True:
        rounds += 1
        queue = PairQueue(module, fuel, used=totals.get("pairs", 0))
        for g in pending:
            queue.add(g)
        queue.run()
        for name, value in queue.stats.items():
            totals[name] = value if name == "pairs" else totals.get(name, 0) + value

        basis = _compress_leading_coefficients(queue.basis)
        basis = _minimalize(basis)
        if tail_reduce:
            basis = _tail_reduce(basis)
        basis = sorted(_dedupe(unit_normalize(g) for g in basis), key=_lead_key, reverse=True)

        certification = check_groebner(basis)
        if certification.ok:
            break
        # 刪配對的準則只是加速；判定失敗時把餘式併入後重新補全
        logger.warning("第 %d 輪結果未通過判定（配對 %s），重新補全", rounds, certification.pair)
        pending = basis + [certification.remainder]

    totals["rounds"] = rounds
    result = GroebnerBasis(module, tuple(basis), certified=True, stats=totals)
    logger.info("Gröbner 基完成：%d 個生成元，處理 %d 個配對，新增 %d 個，略過 %d 個",
                len(basis), totals["pairs"], totals["additions"], totals["pruned"])
    return result


def _dedupe(gens) -> List[FreeElem]:
    out, seen = [], set()
    for g in gens:
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def _compress_leading_coefficients(basis: List[FreeElem]) -> List[FreeElem]:
    """
    以首單項式整除自身的其他生成元做 Bézout 組合，把首係數降為 gcd

    首單項式不變，初始模只會變大（仍在 M 中），因此仍是 Gröbner 基。
    """
    result = sorted(basis, key=_lead_key)
    for idx, g in enumerate(result):
        lt = g.leading_term()
        others = [h for k, h in enumerate(result) if k != idx and h.leading_term().divides(lt)]
        if not others:
            continue
        d, multipliers = bezout_cascade([lt.coeff] + [h.leading_term().coeff for h in others])
        if lt.coeff.divides(d):
            continue
        combined = g.scale(multipliers[0])
        for h, u in zip(others, multipliers[1:]):
            if not u.is_zero:
                combined = combined + h.mul_term(u, mono_div(lt.mono, h.leading_term().mono))
        result[idx] = unit_normalize(combined)
    return _dedupe(result)


def _minimalize(basis: List[FreeElem]) -> List[FreeElem]:
    """由大到小移除首項落在其餘首項生成之項子模中的生成元"""
    kept = sorted(_dedupe(basis), key=_lead_key, reverse=True)
    idx = 0
    while idx < len(kept):
        others = [h.leading_term() for k, h in enumerate(kept) if k != idx]
        if term_in_module(kept[idx].leading_term(), others):
            del kept[idx]
        else:
            idx += 1
    return kept


def _tail_reduce(basis: List[FreeElem]) -> List[FreeElem]:
    result = list(basis)
    for idx, g in enumerate(result):
        others = result[:idx] + result[idx + 1:]
        if not others or len(g) == 1:
            continue
        tail = FreeElem(g.module, g.terms[1:])
        reduced = reduce(tail, others).remainder
        result[idx] = FreeElem(g.module, (g.leading_term(),) + reduced.terms)
    return result


def check_groebner(G) -> CertificationResult:
    """
    以兩兩項 syzygy 判定 Gröbner 基

    Args:
        G: GroebnerBasis 或 FreeElem 序列（非零）
    """
    gens = _gens_of(G)
    if any(g.is_zero for g in gens):
        raise GroebnerError("候選基不可包含零元素")
    leads = [g.leading_term() for g in gens]
    checked = 0
    for syz in term_syzygies(leads):
        checked += 1
        remainder = reduce(s_vector(gens, syz), gens).remainder
        if remainder:
            logger.debug("配對 (%d, %d) 未化簡為零: %s", syz.i + 1, syz.j + 1, remainder)
            return CertificationResult(False, (syz.i, syz.j), remainder, checked)
    return CertificationResult(True, checked=checked)


def is_groebner(G) -> bool:
    return check_groebner(G).ok


def certify(gens: Sequence[FreeElem], module: Optional[FreeModule] = None) -> GroebnerBasis:
    """把現成的生成元包成 GroebnerBasis，certified 反映判定結果"""
    candidate = GroebnerBasis.candidate(gens, module)
    candidate.certified = is_groebner(candidate)
    return candidate


def initial_module(G: GroebnerBasis) -> List[Term]:
    """
    已認證基的首項（去重後），生成 in(M)

    Raises:
        UncertifiedBasisError: G 未認證
    """
    if not G.certified:
        raise UncertifiedBasisError("initial_module 需要已認證的 Gröbner 基")
    seen, terms = set(), []
    for t in G.initial_terms:
        if t not in seen:
            seen.add(t)
            terms.append(t)
    return terms
