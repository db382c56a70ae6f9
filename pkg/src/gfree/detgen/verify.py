"""
行列式實例的驗證

(1) 在 A[1/a] 上確認 minors 本身即為 Gröbner 基；(2) 初始理想為 square-free；
(3) 各特化點的 fiber Hilbert 表與全單位係數實例的表相同。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..charp import SquarefreeReport, squarefree_report
from ..coeff import LocalizedDomain
from ..freeness import (
    FiberReport,
    FreenessError,
    HilbertTable,
    SpecializationPoint,
    Witness,
    default_points,
    fiber_compare,
    hilbert_function,
)
from ..gb import DEFAULT_FUEL, GroebnerBasis, buchberger, is_groebner
from ..poly import FreeElem, Grading
from .instance import AntidiagonalComplement, DetInstance, antidiagonal_complement, build_instance, det_witness

logger = logging.getLogger(__name__)


@dataclass
class DetReport:
    instance: DetInstance
    exempt: AntidiagonalComplement
    witness: Witness
    certified: bool
    generic: HilbertTable
    generic_additions: int
    localized: Optional[HilbertTable] = None
    squarefree: Optional[SquarefreeReport] = None
    fibers: Optional[FiberReport] = None
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.certified
                and self.squarefree is not None and self.squarefree.squarefree
                and self.localized is not None and self.localized == self.generic
                and self.fibers is not None and self.fibers.passed)

    def records(self) -> List[Tuple[str, str]]:
        rows = self.instance.records()
        rows.append(("det.exempt", str(self.exempt)))
        rows.append(("det.sharp", str(self.exempt.sharp).lower()))
        rows.append(("det.witness", str(self.witness.value)))
        rows.append(("det.generic.additions", str(self.generic_additions)))
        rows.extend((f"det.generic.{nu}", str(r)) for nu, r in self.generic.ranks.items())
        if self.localized is not None:
            rows.extend((f"det.hilbert.{nu}", str(r)) for nu, r in self.localized.ranks.items())
        rows.append(("check.det.groebner", str(self.certified).lower()))
        if self.squarefree is not None:
            rows.extend(self.squarefree.records())
        if self.fibers is not None:
            rows.extend(self.fibers.records())
        rows.extend((f"det.failure.{i}", msg) for i, msg in enumerate(self.failures, 1))
        rows.append(("det.pass", str(self.passed).lower()))
        return rows


def _localized_gens(inst: DetInstance, gens: Sequence[FreeElem], w: Witness):
    if w.is_unit:
        return inst.module, list(gens)
    local = LocalizedDomain(inst.domain, w.value)
    module = inst.module.with_domain(local)
    return module, [g.map_coefficients(module, local.localize) for g in gens]


def unit_table(inst: DetInstance, nu_range: Tuple[int, int],
               fuel: int = DEFAULT_FUEL) -> Tuple[HilbertTable, int]:
    """全單位係數實例的 Hilbert 表與 Buchberger 新增的生成元數"""
    _, unit_gens = build_instance(inst.m, inst.n, inst.t, inst.domain)
    G = buchberger(unit_gens, module=inst.module, fuel=fuel)
    grading = Grading.standard(inst.module.nvars)
    table = hilbert_function(G.initial_terms, grading, nu_range, 1, label="generic")
    return table, G.stats.get("additions", 0)


def verify_instance(inst: DetInstance,
                    gens: Sequence[FreeElem],
                    degree_bound: int = 3,
                    points: Optional[Sequence[SpecializationPoint]] = None,
                    fuel: int = DEFAULT_FUEL,
                    workers: int = 1,
                    sharp: bool = False,
                    how_many: int = 3) -> DetReport:
    """
    驗證行列式實例的 generic freeness

    Args:
        inst: 由 build_instance 建立的實例
        gens: 該實例的 t-minors
        degree_bound: Hilbert 表比較到的最高次數
        points: 特化點（省略則取 how_many 個避開 witness 的點）
        sharp: 以較大的 ℋ 計算 witness（實驗性）

    Returns:
        DetReport: det.pass 為三項檢查皆通過

    Raises:
        FuelExhaustedError: 內部 Buchberger 超過 fuel
    """
    nu_range = (0, degree_bound)
    grading = Grading.standard(inst.module.nvars)
    exempt = antidiagonal_complement(inst.m, inst.n, inst.t, sharp)
    w = det_witness(inst, sharp)
    generic, additions = unit_table(inst, nu_range, fuel)

    module, local_gens = _localized_gens(inst, gens, w)
    certified = is_groebner(local_gens)
    report = DetReport(inst, exempt, w, certified, generic, additions)
    logger.info("%d 個 minor 在 %s 上%s Gröbner 基", len(gens), module.domain,
                "是" if certified else "不是")

    if not certified:
        report.failures.append(f"minors 在 {module.domain} 上不是 Gröbner 基")
    else:
        G = GroebnerBasis(module, tuple(local_gens), certified=True)
        report.squarefree = squarefree_report(G, grading)
        if not report.squarefree.squarefree:
            report.failures.append("初始理想不是 square-free")
        try:
            report.localized = hilbert_function(G.initial_terms, grading, nu_range, 1,
                                                label="det.hilbert")
        except FreenessError as e:
            report.failures.append(str(e))
        if report.localized is not None and report.localized != generic:
            differing = report.localized.differing_degrees(generic)
            report.failures.append(f"A[1/a] 上的 Hilbert 表在次數 {differing} 與全單位實例不同")

    if points is None:
        points = default_points(inst.domain, w, how_many)
    report.fibers = fiber_compare(gens, points, nu_range, grading, module=inst.module,
                                  generic=generic, witness=w, fuel=fuel, workers=workers)
    if not report.fibers.passed:
        report.failures.append("有避開 witness 的特化點其 fiber 表與全單位實例不同")
    logger.info("行列式實例驗證%s", "通過" if report.passed else "失敗")
    return report
