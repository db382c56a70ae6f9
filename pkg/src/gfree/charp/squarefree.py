"""
Square-free 退化報告

初始理想由 square-free 單項式生成、且係數環含有一個體時，
反轉 witness 後 R/I 的局部上同調模皆為自由模（只回報定理的適用性，不計算上同調）。
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ..freeness import Witness, witness as extract_witness
from ..gb import GroebnerBasis, UncertifiedBasisError
from ..poly import Grading, Term, format_monomial, is_squarefree
from .frobenius import CharpError


class HomogeneityError(CharpError):
    """生成元在給定分次下不齊次"""
    pass


CONCLUSION = "H_m^i(R/I) ⊗ A[1/a] 對所有 i ≥ 0 皆為自由 A[1/a]-模"


@dataclass
class SquarefreeReport:
    squarefree: bool
    offending: List[Term]
    witness: Witness
    contains_field: bool
    variables: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def applies(self) -> bool:
        return self.squarefree and self.contains_field

    def records(self) -> List[Tuple[str, str]]:
        rows = [("sqfree.squarefree", str(self.squarefree).lower()),
                ("sqfree.witness", str(self.witness.value)),
                ("sqfree.contains_field", str(self.contains_field).lower())]
        rows.extend((f"sqfree.offender.{i}", format_monomial(t.mono, self.variables) or "1")
                    for i, t in enumerate(self.offending, 1))
        rows.append(("sqfree.applies", str(self.applies).lower()))
        if self.applies:
            rows.append(("sqfree.conclusion", CONCLUSION))
        elif self.squarefree:
            rows.append(("sqfree.conclusion", "係數環不含體，定理的假設不成立"))
        rows.append(("check.sqfree", str(self.squarefree).lower()))
        return rows


def squarefree_report(G: GroebnerBasis, grading: Optional[Grading] = None) -> SquarefreeReport:
    """
    檢查初始理想是否由 square-free 單項式生成

    Args:
        G: 已認證的 Gröbner 基（理想，秩 1）
        grading: 正分次，預設標準分次

    Raises:
        UncertifiedBasisError: G 未認證
        CharpError: 模秩不是 1
        HomogeneityError: 生成元不齊次
    """
    if not G.certified:
        raise UncertifiedBasisError("squarefree_report 需要已認證的 Gröbner 基")
    module = G.module
    if module.rank != 1:
        raise CharpError(f"square-free 報告只適用於理想（秩 1），收到秩 {module.rank}")
    grading = grading or Grading.standard(module.nvars)
    for i, g in enumerate(G.gens, 1):
        if not g.is_homogeneous(grading):
            raise HomogeneityError(f"第 {i} 個生成元不是齊次的: {g}")

    seen, offending = set(), []
    for t in G.initial_terms:
        if not is_squarefree(t.mono) and t.mono not in seen:
            seen.add(t.mono)
            offending.append(t)
    offending.sort(key=lambda t: module.key(t.mono, t.basis), reverse=True)
    return SquarefreeReport(
        squarefree=not offending,
        offending=offending,
        witness=extract_witness(G),
        contains_field=module.domain.contains_field,
        variables=module.variables,
    )

