"""
(ω,𝕕)-齊次化與平坦退化檢查

在 F[t] 中以權重細化序 >′（先比 (ω,1) 加權次數加平移，再比原本的 >）
表示齊次化後的生成元。t = 0 的 fiber 為初始模、t = 1 的 fiber 為原模。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..gb import DEFAULT_FUEL, GroebnerBasis, UncertifiedBasisError, is_groebner
from ..poly import FreeElem, FreeModule, Grading, OrderSpec, Term
from ..freeness import (
    HilbertTable,
    SpecializationPoint,
    Witness,
    default_points,
    fiber_table,
    witness as extract_witness,
)
from .lp import DegenerationError
from .weights import DEFAULT_SEARCH_BOX, shift_vector, weight_vector, weighted_degree

logger = logging.getLogger(__name__)

_T_CANDIDATES = ("t", "s", "u", "h")


def fresh_variable(taken: Sequence[str]) -> str:
    """挑一個不與既有變數（含係數環變數）衝突的變數名"""
    taken = set(taken)
    for name in _T_CANDIDATES:
        if name not in taken:
            return name
    i = 0
    while f"t{i}" in taken:
        i += 1
    return f"t{i}"


@dataclass
class DegenerationData:
    """
    Attributes:
        omega: 權重向量 ω
        shifts: 基底平移 𝕕
        homogenized: F[t] 中齊次化後的生成元
        source: 原 Gröbner 基
        module: F[t]（含 >′ 序）
        tvar: 新增變數名
        certified: 在 >′ 下以 is_groebner 認證的結果（未要求時為 None）
    """

    omega: Tuple[int, ...]
    shifts: Tuple[int, ...]
    homogenized: Tuple[FreeElem, ...]
    source: GroebnerBasis
    module: FreeModule
    tvar: str = "t"
    certified: Optional[bool] = None

    def records(self) -> List[Tuple[str, str]]:
        rows = [("degeneration.omega", ",".join(map(str, self.omega))),
                ("degeneration.shifts", ",".join(map(str, self.shifts))),
                ("degeneration.t", self.tvar)]
        rows.extend((f"degeneration.hom.{i}", str(h)) for i, h in enumerate(self.homogenized, 1))
        if self.certified is not None:
            rows.append(("check.degeneration.homogenized_gb", str(self.certified).lower()))
        return rows


def _extended_module(source: FreeModule, omega, shifts) -> Tuple[FreeModule, str]:
    taken = list(source.variables)
    coeff_var = getattr(source.domain, "var", None)
    if coeff_var:
        taken.append(coeff_var)
    tvar = fresh_variable(taken)
    base = source.order
    perm = base.permutation if base.permutation is not None else tuple(range(source.nvars))
    order = OrderSpec(base.base, perm, tuple(omega) + (1,), tuple(shifts))
    return FreeModule(source.domain, source.variables + (tvar,), source.rank, order), tvar


def homogenize_element(w: FreeElem, module: FreeModule, omega, shifts) -> FreeElem:
    """每一項乘上 t^(最高次數 − 該項次數)；首項必須是唯一的最高次項"""
    degrees = [weighted_degree(t.mono, t.basis, omega, shifts) for t in w.terms]
    top = max(degrees)
    if degrees.count(top) != 1 or degrees[0] != top:
        raise DegenerationError(f"(ω,𝕕)-最高次項不唯一或不是首項: {w}")
    return FreeElem(module, (Term(t.coeff, t.mono + (top - d,), t.basis)
                             for t, d in zip(w.terms, degrees)))


def homogenize(G: GroebnerBasis,
               omega: Optional[Sequence[int]] = None,
               shifts: Optional[Sequence[int]] = None,
               certify: bool = False,
               search_box: int = DEFAULT_SEARCH_BOX) -> DegenerationData:
    """
    對已認證 Gröbner 基做 (ω,𝕕)-齊次化

    Args:
        G: 已認證的 Gröbner 基
        omega: 權重向量（省略則由 weight_vector 求得）
        shifts: 基底平移（省略則由 shift_vector 求得）
        certify: 是否在 >′ 下以 is_groebner 重新認證
        search_box: 權重窮舉後備搜尋的上界

    Raises:
        UncertifiedBasisError: G 未認證
        DegenerationError: (ω,𝕕) 未使首項成為唯一最高次項
    """
    if not G.certified:
        raise UncertifiedBasisError("homogenize 需要已認證的 Gröbner 基")
    omega = tuple(omega) if omega is not None else weight_vector(G, search_box)
    shifts = tuple(shifts) if shifts is not None else shift_vector(G, omega)
    if len(omega) != G.module.nvars or len(shifts) != G.module.rank:
        raise DegenerationError("ω 或 𝕕 的長度與環維度不符")
    module, tvar = _extended_module(G.module, omega, shifts)
    hom = tuple(homogenize_element(g, module, omega, shifts) for g in G.gens)
    certified = None
    if certify:
        certified = is_groebner(hom)
        logger.info("齊次化生成元在 >′ 下%s Gröbner 基", "是" if certified else "不是")
    return DegenerationData(omega, shifts, hom, G, module, tvar, certified)


def at_t(D: DegenerationData, value: int) -> List[FreeElem]:
    """把 t 代入 0 或 1，回到原自由模"""
    target = D.source.module
    images = []
    for h in D.homogenized:
        terms = [Term(t.coeff, t.mono[:-1], t.basis) for t in h.terms
                 if value == 1 or t.mono[-1] == 0]
        images.append(FreeElem(target, terms))
    return images


@dataclass
class DegenerationReport:
    """退化檢查：(a) t=0 為初始項、(b) t=1 為原生成元、(c) 兩端 fiber 秩相同"""

    data: DegenerationData
    t0_ok: bool
    t1_ok: bool
    ranks_ok: Optional[bool]
    point: Optional[SpecializationPoint] = None
    table_t0: Optional[HilbertTable] = None
    table_t1: Optional[HilbertTable] = None
    failures: List[str] = field(default_factory=list)
    witness: Optional[Witness] = None

    @property
    def passed(self) -> bool:
        return self.t0_ok and self.t1_ok and self.ranks_ok is not False

    def records(self) -> List[Tuple[str, str]]:
        rows = self.data.records()
        if self.witness is not None:
            rows.append(("degeneration.witness", str(self.witness.value)))
        if self.point is not None:
            rows.append(("degeneration.point", str(self.point)))
        for label, table in (("t0", self.table_t0), ("t1", self.table_t1)):
            if table is not None:
                rows.extend((f"degeneration.fiber.{label}.{nu}", str(r))
                            for nu, r in table.ranks.items())
        rows.append(("check.degeneration.t0", str(self.t0_ok).lower()))
        rows.append(("check.degeneration.t1", str(self.t1_ok).lower()))
        rows.append(("check.degeneration.ranks",
                     "skipped" if self.ranks_ok is None else str(self.ranks_ok).lower()))
        rows.extend((f"check.degeneration.failure.{i}", msg)
                    for i, msg in enumerate(self.failures, 1))
        rows.append(("check.degeneration", str(self.passed).lower()))
        return rows


def degeneration_gradings(D: DegenerationData) -> Tuple[Grading, Grading]:
    """F 上的 (ω,𝕕)-分次，以及 F[t] 上 t 權重為 1 的延伸"""
    return Grading(D.omega, D.shifts), Grading(D.omega + (1,), D.shifts)


def degeneration_check(D: DegenerationData,
                       bound: int = 4,
                       point: Optional[SpecializationPoint] = None,
                       fuel: int = DEFAULT_FUEL) -> DegenerationReport:
    """
    檢查平坦退化的三個性質

    (c) 在避開 witness 的特化點 κ 上以 (ω,𝕕)-分次比較兩端：t=0 端是 F/in(M) 的分次秩；
    t=1 端取齊次化模 F[t]/E 的 Hilbert 函數 h，以 h(ν) − h(ν−1) 得到 F/M 在 (ω,𝕕)
    濾過下的分次秩。t 在 fiber 上是非零因子時兩者逐次數相同。
    次數從最小的基底平移起算 bound 個次數。

    Args:
        D: 齊次化資料
        bound: 比較的次數個數
        point: 特化點（省略則取第一個避開 witness 的點）
    """
    G = D.source
    source = G.module
    failures: List[str] = []

    t0 = at_t(D, 0)
    t0_ok = True
    for i, (image, lead) in enumerate(zip(t0, G.initial_terms), 1):
        if image.terms != (lead,):
            t0_ok = False
            failures.append(f"第 {i} 個生成元在 t=0 得到 {image}，預期首項 {FreeElem(source, [lead])}")

    t1 = at_t(D, 1)
    t1_ok = True
    for i, (image, gen) in enumerate(zip(t1, G.gens), 1):
        if image != gen:
            t1_ok = False
            failures.append(f"第 {i} 個生成元在 t=1 得到 {image}，預期 {gen}")

    w = extract_witness(G)
    if point is None:
        candidates = default_points(source.domain, w, 1)
        point = candidates[0] if candidates else None

    ranks_ok: Optional[bool] = None
    table0 = table1 = None
    if point is None:
        failures.append("找不到避開 witness 的特化點，略過秩比較")
    else:
        graded, extended = degeneration_gradings(D)
        low = min(D.shifts)
        nu_range = (low, low + bound)
        table0, _ = fiber_table(t0, source, point, graded, nu_range, fuel)
        cumulative, _ = fiber_table(list(D.homogenized), D.module, point, extended, nu_range, fuel)
        h = cumulative.ranks
        table1 = HilbertTable({nu: h[nu] - h.get(nu - 1, 0) for nu in h}, graded)
        table0.label, table1.label = "t0", "t1"
        differing = table0.differing_degrees(table1)
        ranks_ok = not differing
        if differing:
            failures.append(f"t=0 與 t=1 的 fiber 在 (ω,𝕕)-次數 {differing} 的秩不同")

    report = DegenerationReport(D, t0_ok, t1_ok, ranks_ok, point, table0, table1, failures, w)
    logger.info("退化檢查%s", "通過" if report.passed else "失敗")
    return report


def degenerate(G: GroebnerBasis, certify: bool = False, bound: int = 4,
               fuel: int = DEFAULT_FUEL,
               search_box: int = DEFAULT_SEARCH_BOX) -> DegenerationReport:
    """weight_vector → shift_vector → homogenize → degeneration_check"""
    data = homogenize(G, certify=certify, search_box=search_box)
    return degeneration_check(data, bound, fuel=fuel)
