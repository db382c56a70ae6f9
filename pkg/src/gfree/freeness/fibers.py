"""
Fiber Hilbert 函數比較

對每個特化點計算 κ 上的 Gröbner 基與 Hilbert 表，逐次數與 generic 表比較。
讓 witness 變為零的點仍會計算，但只標示為「no guarantee」。
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from ..gb import DEFAULT_FUEL, FuelExhaustedError, buchberger
from ..poly import FreeElem, FreeModule, Grading
from ..utils import BatchProcessor
from .specialization import SpecializationPoint, specialize
from .standard import HilbertTable, free_table, hilbert_function
from .witness import FreenessError, Witness, witness as extract_witness

logger = logging.getLogger(__name__)

NO_GUARANTEE = "no guarantee"


@dataclass
class FiberResult:
    """單一特化點的結果"""

    point: SpecializationPoint
    table: Optional[HilbertTable]
    kills_witness: bool
    vanished: List[int] = field(default_factory=list)
    differing: List[int] = field(default_factory=list)
    error: Optional[str] = None

    @property
    def equal(self) -> bool:
        return self.error is None and not self.differing

    @property
    def guarantee(self) -> str:
        return NO_GUARANTEE if self.kills_witness else "expected equal"


@dataclass
class FiberReport:
    """
    generic 表與各 fiber 表的比較

    passed 只看不讓 witness 變為零的點：這些點的表必須與 generic 表相同。
    """

    generic: HilbertTable
    witness: Optional[Witness]
    fibers: List[FiberResult]

    @property
    def passed(self) -> bool:
        return all(f.equal for f in self.fibers if not f.kills_witness)

    def records(self) -> List[Tuple[str, str]]:
        rows: List[Tuple[str, str]] = []
        if self.witness is not None:
            rows.append(("fibers.witness", str(self.witness.value)))
        rows.extend((f"fibers.generic.{nu}", str(r)) for nu, r in self.generic.ranks.items())
        for f in self.fibers:
            prefix = f"fiber.{f.point}"
            if f.error is not None:
                rows.append((f"{prefix}.error", f.error))
            else:
                rows.extend((f"{prefix}.{nu}", str(r)) for nu, r in f.table.ranks.items())
            rows.append((f"{prefix}.equal", str(f.equal).lower()))
            rows.append((f"{prefix}.guarantee", f.guarantee))
            if f.differing:
                rows.append((f"{prefix}.differs", ",".join(map(str, f.differing))))
            if f.vanished:
                rows.append((f"{prefix}.vanished", ",".join(str(i + 1) for i in f.vanished)))
        rows.append(("check.fibers", str(self.passed).lower()))
        return rows


def _require_homogeneous(gens: Sequence[FreeElem], grading: Grading) -> None:
    for i, g in enumerate(gens, 1):
        if not g.is_homogeneous(grading):
            raise FreenessError(f"第 {i} 個生成元在給定分次下不是齊次的: {g}")


def generic_table(gens: Sequence[FreeElem], module: FreeModule, grading: Grading,
                  nu_range: Tuple[int, int], fuel: int = DEFAULT_FUEL,
                  refine: bool = False) -> Tuple[HilbertTable, Witness]:
    """A 上的 Gröbner 基 → witness 與反轉 witness 後的 Hilbert 表"""
    G = buchberger(gens, module=module, fuel=fuel)
    w = extract_witness(G, refine=refine)
    table = hilbert_function(G.initial_terms, grading, nu_range, module.rank, w, label="generic")
    return table, w


def fiber_table(gens: Sequence[FreeElem], module: FreeModule, point: SpecializationPoint,
                grading: Grading, nu_range: Tuple[int, int],
                fuel: int = DEFAULT_FUEL) -> Tuple[HilbertTable, List[int]]:
    """特化到 κ 後的 Hilbert 表與消失的生成元"""
    images, vanished, target = specialize(gens, point, module)
    label = f"fiber.{point}"
    if not images:
        return free_table(grading, nu_range, module.rank, label), vanished
    G = buchberger(images, module=target, fuel=fuel)
    return hilbert_function(G.initial_terms, grading, nu_range, module.rank, label=label), vanished


def fiber_compare(gens: Sequence[FreeElem],
                  points: Sequence[SpecializationPoint],
                  nu_range: Tuple[int, int],
                  grading: Grading,
                  module: Optional[FreeModule] = None,
                  generic: Optional[HilbertTable] = None,
                  witness: Optional[Witness] = None,
                  fuel: int = DEFAULT_FUEL,
                  workers: int = 1,
                  refine: bool = False) -> FiberReport:
    """
    比較各特化點的 fiber Hilbert 表與 generic 表

    Args:
        gens: A 上的齊次生成元
        points: 特化點
        nu_range: 次數範圍 (ν₀, ν₁)
        grading: 正分次
        module: 生成元為空時必須提供
        generic: 指定的 generic 表（省略則由 A 上的 Gröbner 基計算）
        witness: 指定的 witness（省略則由 A 上的 Gröbner 基取出）
        workers: 並行執行緒數，結果依點的順序聚合

    Returns:
        FiberReport

    Raises:
        FreenessError: 生成元不是齊次的
    """
    gens = list(gens)
    if module is None:
        if not gens:
            raise FreenessError("空生成元列表需指定 module")
        module = gens[0].module
    _require_homogeneous(gens, grading)

    if not gens:
        generic = generic or free_table(grading, nu_range, module.rank, "generic")
    elif generic is None or witness is None:
        table, computed = generic_table(gens, module, grading, nu_range, fuel, refine)
        generic = generic or table
        witness = witness or computed

    points = list(points)

    def compute(index: int) -> Tuple[HilbertTable, List[int]]:
        return fiber_table(gens, module, points[index], grading, nu_range, fuel)

    processor = BatchProcessor(verbose=True, workers=workers)
    outcome = processor.process_items(list(range(len(points))), compute,
                                      label=lambda index: str(points[index]))
    done = {entry["item"]: entry["result"] for entry in outcome["success"]}
    failed = {entry["item"]: entry["error"] for entry in outcome["failed"]}
    for entry in outcome["failed"]:
        if isinstance(entry["exception"], FuelExhaustedError):
            raise entry["exception"]

    fibers = []
    for index, point in enumerate(points):
        kills = witness is not None and point.kills(witness.value)
        if kills:
            logger.warning("特化點 %s 使 witness %s 變為零：結果不保證相等", point, witness.value)
        if index in failed:
            fibers.append(FiberResult(point, None, kills, error=failed[index]))
            continue
        table, vanished = done[index]
        fibers.append(FiberResult(point, table, kills, vanished, generic.differing_degrees(table)))
    return FiberReport(generic, witness, fibers)
