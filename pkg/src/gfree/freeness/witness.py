"""
Freeness witness

取 Gröbner 基首係數（非單位者）的 lcm 作為 a：反轉 a 之後所有首係數都成為單位，
F/M ⊗ A_a 是以標準單項式為基底的自由 A_a-模。
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..coeff import RingElem, bezout_cascade, lcm_many
from ..gb import GroebnerBasis, UncertifiedBasisError
from ..poly import Term


class FreenessError(Exception):
    """generic freeness 計算錯誤"""
    pass


class LocalizationError(FreenessError):
    """反轉 witness 後仍有首係數不可逆"""
    pass


GUARANTEE = "F/M ⊗ A[1/a] 為自由 A[1/a]-模，基底為標準單項式"


@dataclass(frozen=True)
class Witness:
    """
    Attributes:
        value: a（單位正規化）
        factors: (非單位首係數, 生成元索引) 列表，索引從 0 起算
        refined: 是否經過 gcd 精煉
    """

    value: RingElem
    factors: Tuple[Tuple[RingElem, int], ...] = ()
    refined: bool = False

    @property
    def is_unit(self) -> bool:
        return self.value.is_unit

    @property
    def domain(self):
        return self.value.domain

    def records(self) -> List[Tuple[str, str]]:
        rows = [("witness.value", str(self.value)),
                ("witness.unit", str(self.is_unit).lower()),
                ("witness.refined", str(self.refined).lower())]
        for coeff, index in self.factors:
            rows.append((f"witness.factor.{index + 1}", str(coeff)))
        rows.append(("witness.guarantee", GUARANTEE))
        return rows


def group_gcds(initials: Sequence[Term]) -> List[RingElem]:
    """每個首項對應的 gcd{a_j : m_j | m_i，基底相同}"""
    gcds = []
    for t in initials:
        coeffs = [s.coeff for s in initials if s.divides(t)]
        gcds.append(bezout_cascade(coeffs)[0])
    return gcds


def witness(G: GroebnerBasis, refine: bool = False) -> Witness:
    """
    由已認證 Gröbner 基取出 freeness witness

    Args:
        G: 已認證的 Gröbner 基
        refine: 先以單項式整除關係取各組係數的 gcd 再取 lcm

    Returns:
        Witness: 空基或首係數皆為單位時為 1

    Raises:
        UncertifiedBasisError: G 未認證

    Example:
        >>> witness(buchberger([2*x + y, 3*x])).value
        RingElem(ZZ, 3)
    """
    if not G.certified:
        raise UncertifiedBasisError("witness 需要已認證的 Gröbner 基")
    domain = G.module.domain
    initials = G.initial_terms
    coeffs = group_gcds(initials) if refine else [t.coeff for t in initials]
    factors = tuple((c, i) for i, c in enumerate(coeffs) if not c.is_unit)
    value = lcm_many([c for c, _ in factors], domain)
    return Witness(value, factors, refined=refine)
