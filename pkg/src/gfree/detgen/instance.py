"""
行列式理想實例

矩陣 (a_ij x_ij) 的 t-minor 生成理想 I_t。變數依列優先宣告為 x{i}_{j}，
單項式序為 antidiagonal lex：x_{1,n} > … > x_{1,1} > x_{2,n} > … > x_{m,1}，
每個 minor 的首項因而是它的反對角線乘積。
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import Any, FrozenSet, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation

from ..coeff import CoeffDomain, RingElem, lcm_many
from ..freeness import Witness
from ..poly import BaseOrder, FreeElem, FreeModule, OrderSpec, Term
from ..utils import BatchProcessor

logger = logging.getLogger(__name__)

Position = Tuple[int, int]


class DeterminantalError(ValueError):
    """行列式實例參數錯誤"""
    pass


def _check_dimensions(m: int, n: int, t: int) -> None:
    if not (1 <= t <= m <= n):
        raise DeterminantalError(f"需要 1 ≤ t ≤ m ≤ n，收到 m={m}, n={n}, t={t}")


@dataclass(frozen=True)
class AntidiagonalComplement:
    """不落在任何 t-minor 主反對角線上、可自 witness 中豁免的位置集合 ℋ"""

    m: int
    n: int
    t: int
    positions: FrozenSet[Position]
    sharp: bool = False

    def __contains__(self, position: Position) -> bool:
        return position in self.positions

    def sorted(self) -> List[Position]:
        return sorted(self.positions)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for i, j in self.sorted()) + "}"


def antidiagonal_complement(m: int, n: int, t: int, sharp: bool = False) -> AntidiagonalComplement:
    """
    ℋ = {i+j ≤ t−1} ∪ {i+j ≥ m+n−t+2}（1 起算的位置）

    sharp=True 時下界改為 i+j ≤ t，是實驗性的較大集合。

    Raises:
        DeterminantalError: 維度不符 1 ≤ t ≤ m ≤ n

    Example:
        >>> antidiagonal_complement(2, 3, 2).sorted()
        [(2, 3)]
    """
    _check_dimensions(m, n, t)
    low = t if sharp else t - 1
    high = m + n - t + 2
    positions = frozenset(
        (i, j)
        for i in range(1, m + 1)
        for j in range(1, n + 1)
        if i + j <= low or i + j >= high
    )
    return AntidiagonalComplement(m, n, t, positions, sharp)


def variable_name(i: int, j: int) -> str:
    return f"x{i}_{j}"


def antidiagonal_module(domain: CoeffDomain, m: int, n: int) -> FreeModule:
    """R = A[x_ij]，變數列優先宣告，序為 antidiagonal lex"""
    variables = tuple(variable_name(i, j) for i in range(1, m + 1) for j in range(1, n + 1))
    perm = tuple((i - 1) * n + (j - 1) for i in range(1, m + 1) for j in range(n, 0, -1))
    return FreeModule(domain, variables, 1, OrderSpec(BaseOrder.LEX, perm))


@dataclass
class DetInstance:
    """
    Attributes:
        m, n, t: 矩陣大小與 minor 階數
        coeffs: m×n 非零係數 a_ij（列優先）
        module: R = A[x_ij]（antidiagonal lex）
    """

    m: int
    n: int
    t: int
    coeffs: Tuple[Tuple[RingElem, ...], ...]
    module: FreeModule

    @property
    def domain(self) -> CoeffDomain:
        return self.module.domain

    def coeff(self, i: int, j: int) -> RingElem:
        return self.coeffs[i - 1][j - 1]

    @property
    def minor_count(self) -> int:
        return comb(self.m, self.t) * comb(self.n, self.t)

    def is_unit_instance(self) -> bool:
        return all(c.is_unit for row in self.coeffs for c in row)

    def with_unit_coefficients(self) -> "DetInstance":
        one = self.domain.one()
        coeffs = tuple(tuple(one for _ in range(self.n)) for _ in range(self.m))
        return DetInstance(self.m, self.n, self.t, coeffs, self.module)

    def records(self) -> List[Tuple[str, str]]:
        rows = [("det.m", str(self.m)), ("det.n", str(self.n)), ("det.t", str(self.t)),
                ("det.ring", str(self.domain)), ("det.order", str(self.module.order)),
                ("det.minors", str(self.minor_count))]
        rows.extend((f"det.a.{i}.{j}", str(self.coeff(i, j)))
                    for i in range(1, self.m + 1) for j in range(1, self.n + 1))
        return rows


def _normalize_coeffs(domain: CoeffDomain, m: int, n: int,
                      coeffs: Optional[Sequence[Sequence[Any]]]) -> Tuple[Tuple[RingElem, ...], ...]:
    if coeffs is None:
        return tuple(tuple(domain.one() for _ in range(n)) for _ in range(m))
    if len(coeffs) != m or any(len(row) != n for row in coeffs):
        raise DeterminantalError(f"係數矩陣必須是 {m}×{n}")
    rows = []
    for i, row in enumerate(coeffs, 1):
        converted = []
        for j, value in enumerate(row, 1):
            c = domain(value)
            if c.is_zero:
                raise DeterminantalError(f"係數 a_{i}{j} 不可為零")
            converted.append(c)
        rows.append(tuple(converted))
    return tuple(rows)


def antidiagonal_term(inst: DetInstance, rows: Sequence[int], cols: Sequence[int]) -> Term:
    """minor(rows, cols) 的反對角線項，含 Leibniz 符號"""
    k = len(rows)
    sigma = [k - 1 - s for s in range(k)]
    return _leibniz_term(inst, rows, cols, sigma)


def _leibniz_term(inst: DetInstance, rows, cols, sigma) -> Term:
    sign = Permutation(list(sigma)).signature()
    coeff = inst.domain.one() if sign > 0 else -inst.domain.one()
    mono = [0] * (inst.m * inst.n)
    for i, s in zip(rows, sigma):
        j = cols[s]
        coeff = coeff * inst.coeff(i, j)
        mono[(i - 1) * inst.n + (j - 1)] += 1
    return Term(coeff, tuple(mono))


def minor(inst: DetInstance, rows: Sequence[int], cols: Sequence[int]) -> FreeElem:
    """以 Leibniz 公式展開 det((a_ij x_ij)_{rows × cols})"""
    k = len(rows)
    return FreeElem(inst.module, (_leibniz_term(inst, rows, cols, sigma)
                                  for sigma in permutations(range(k))))


def build_instance(m: int, n: int, t: int, domain: CoeffDomain,
                   coeffs: Optional[Sequence[Sequence[Any]]] = None,
                   workers: int = 1) -> Tuple[DetInstance, List[FreeElem]]:
    """
    建立實例並展開全部 C(m,t)·C(n,t) 個 t-minor

    Args:
        m, n, t: 1 ≤ t ≤ m ≤ n
        domain: 係數環 A
        coeffs: m×n 非零係數（省略則全為 1）
        workers: 展開 minor 的執行緒數，輸出順序固定為 (列組, 行組) 的字典序

    Returns:
        tuple: (DetInstance, minors)

    Raises:
        DeterminantalError: 維度錯誤、係數為零或首項不是反對角線（內部錯誤）
    """
    _check_dimensions(m, n, t)
    inst = DetInstance(m, n, t, _normalize_coeffs(domain, m, n, coeffs),
                       antidiagonal_module(domain, m, n))
    pairs = [(rows, cols)
             for rows in combinations(range(1, m + 1), t)
             for cols in combinations(range(1, n + 1), t)]

    processor = BatchProcessor(continue_on_error=False, workers=workers)
    outcome = processor.process_items(pairs, lambda pair: minor(inst, *pair))
    if outcome["failed"]:
        raise outcome["failed"][0]["exception"]
    gens = [entry["result"] for entry in outcome["success"]]

    for (rows, cols), g in zip(pairs, gens):
        if g.leading_term() != antidiagonal_term(inst, rows, cols):
            raise DeterminantalError(f"minor {rows}×{cols} 的首項不是反對角線: {g}")
    logger.info("展開 %d×%d 矩陣的 %d 個 %d-minor", m, n, len(gens), t)
    return inst, gens


def det_witness(inst: DetInstance, sharp: bool = False) -> Witness:
    """
    a = lcm{a_ij : (i,j) ∉ ℋ}（單位正規化）

    Example:
        >>> inst, _ = build_instance(2, 3, 2, ZZ, [[6, 1, 1], [1, 1, 1]])
        >>> det_witness(inst).value
        RingElem(ZZ, 6)
    """
    exempt = antidiagonal_complement(inst.m, inst.n, inst.t, sharp)
    factors = []
    for i in range(1, inst.m + 1):
        for j in range(1, inst.n + 1):
            c = inst.coeff(i, j)
            if (i, j) not in exempt and not c.is_unit:
                factors.append((c, (i - 1) * inst.n + (j - 1)))
    value = lcm_many([c for c, _ in factors], inst.domain)
    return Witness(value, tuple(factors))
