"""
特化（specialization）：係數環 A 到剩餘體 κ 的賦值

- ℤ → 𝔽_q（q 為質數）
- k[t] → k（t ↦ c）
- 體 → 自身（恆等）
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Any, List, NamedTuple, Optional, Sequence

from sympy import isprime, nextprime

from ..coeff import (
    CoeffDomain,
    DomainKind,
    IntegerDomain,
    PrimeFieldDomain,
    RingElem,
    UnivariatePolyDomain,
)
from ..poly import FreeElem, FreeModule
from .witness import FreenessError, Witness


class SpecializationError(FreenessError):
    """特化點無效"""
    pass


@dataclass(frozen=True)
class SpecializationPoint:
    """
    A → κ 的賦值

    Attributes:
        source: 係數環 A
        value: ℤ 時為質數 q；k[t] 時為 k 中的純量；體時為 None
        target: 剩餘體 κ
    """

    source: CoeffDomain
    value: Any
    target: CoeffDomain

    @classmethod
    def for_domain(cls, domain: CoeffDomain, value: Any = None) -> "SpecializationPoint":
        """
        依係數環建立特化點

        Raises:
            SpecializationError: q 不是質數、純量無法轉換或係數環不支援特化
        """
        if isinstance(domain, IntegerDomain):
            if not isinstance(value, int) or isinstance(value, bool) or not isprime(value):
                raise SpecializationError(f"ℤ 的特化需要質數 q，收到 {value!r}")
            return cls(domain, value, PrimeFieldDomain(value))
        if isinstance(domain, UnivariatePolyDomain):
            if value is None:
                raise SpecializationError(f"{domain} 的特化需要 {domain.var} 的值")
            try:
                scalar = domain.base(value)
            except (ValueError, TypeError) as e:
                raise SpecializationError(f"無法把 {value!r} 當作 {domain.base} 的元素: {e}")
            return cls(domain, scalar, domain.base)
        if domain.is_field and domain.kind is not DomainKind.LOCALIZED:
            return cls(domain, None, domain)
        raise SpecializationError(f"不支援 {domain} 的特化")

    def __call__(self, c: RingElem) -> RingElem:
        if c.domain != self.source:
            raise SpecializationError(f"係數 {c} 不屬於 {self.source}")
        if isinstance(self.source, IntegerDomain):
            return self.target(c.payload)
        if isinstance(self.source, UnivariatePolyDomain):
            return self.source.evaluate(c, self.value.payload)
        return c

    def kills(self, a: RingElem) -> bool:
        """a 在此點的像是否為零"""
        return self(a).is_zero

    def module(self, source: FreeModule) -> FreeModule:
        return source.with_domain(self.target)

    def __str__(self) -> str:
        if isinstance(self.source, IntegerDomain):
            return f"q={self.value}"
        if isinstance(self.source, UnivariatePolyDomain):
            return f"{self.source.var}={self.value}"
        return "id"


class SpecializedGens(NamedTuple):
    gens: List[FreeElem]
    vanished: List[int]
    module: FreeModule


def specialize(gens: Sequence[FreeElem], point: SpecializationPoint,
               module: Optional[FreeModule] = None) -> SpecializedGens:
    """
    逐係數特化生成元

    Returns:
        SpecializedGens: 非零像、整個變為零的生成元索引（從 0 起算）與目標模
    """
    if module is None:
        if not gens:
            raise SpecializationError("空生成元列表需指定 module")
        module = gens[0].module
    target = point.module(module)
    images, vanished = [], []
    for i, g in enumerate(gens):
        image = g.map_coefficients(target, point)
        if image.is_zero:
            vanished.append(i)
        else:
            images.append(image)
    return SpecializedGens(images, vanished, target)


def default_points(domain: CoeffDomain, witness: Optional[Witness],
                   how_many: int = 3) -> List[SpecializationPoint]:
    """
    確定性地選出不讓 witness 變為零的特化點

    ℤ 取最小的不整除 a 的質數；k[t] 取最小的使 a(c) ≠ 0 的純量 0, 1, 2, …；
    體只有恆等特化。
    """
    points: List[SpecializationPoint] = []

    def avoids(point: SpecializationPoint) -> bool:
        return witness is None or not point.kills(witness.value)

    if isinstance(domain, IntegerDomain):
        q = 2
        while len(points) < how_many:
            point = SpecializationPoint.for_domain(domain, q)
            if avoids(point):
                points.append(point)
            q = int(nextprime(q))
        return points
    if isinstance(domain, UnivariatePolyDomain):
        limit = domain.characteristic or None
        for c in count():
            if len(points) >= how_many or (limit is not None and c >= limit):
                break
            point = SpecializationPoint.for_domain(domain, c)
            if avoids(point):
                points.append(point)
        return points
    return [SpecializationPoint.for_domain(domain)]


def parse_point(domain: CoeffDomain, text: str) -> SpecializationPoint:
    """CLI 的點字串（'5'、'1/2'）轉成特化點"""
    text = text.strip()
    if isinstance(domain, IntegerDomain):
        try:
            return SpecializationPoint.for_domain(domain, int(text))
        except ValueError:
            raise SpecializationError(f"無效的質數: {text!r}")
    if isinstance(domain, UnivariatePolyDomain):
        try:
            value = Fraction(text)
        except ValueError:
            raise SpecializationError(f"無效的純量: {text!r}")
        return SpecializationPoint.for_domain(domain, value)
    return SpecializationPoint.for_domain(domain)
