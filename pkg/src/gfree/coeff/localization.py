"""
局部化 A_a

元素以 (numerator, apower) 表示 numerator / a^apower；正規形式取最小的 apower
（a 整除 numerator 時持續約去）。A_a 中的 gcd、整除與單位判定都化約為
strip_witness 後的 core 在 A 中的運算。
"""

from dataclasses import dataclass
from typing import Any, NamedTuple, Tuple

from .arithmetic import ext_gcd, strip_witness_parts
from .domain import CoeffDomain, CoeffError, DomainKind, RingElem


class LocalizedElem(NamedTuple):
    """numerator / a^apower"""
    numerator: RingElem
    apower: int


@dataclass(frozen=True)
class LocalizedDomain(CoeffDomain):
    """
    局部化係數環 A_a（a 為固定的 witness）

    Example:
        >>> ZZ = IntegerDomain()
        >>> Z3 = LocalizedDomain(ZZ, ZZ(3))
        >>> Z3.localize(ZZ(6)).is_unit
        False
        >>> Z3.localize(ZZ(9)).is_unit
        True
    """

    base: CoeffDomain
    witness: RingElem

    kind = DomainKind.LOCALIZED

    def __post_init__(self):
        if isinstance(self.base, LocalizedDomain):
            raise CoeffError("不支援巢狀局部化")
        if self.witness.domain != self.base or self.witness.is_zero:
            raise CoeffError("witness 必須是 base 中的非零元素")

    def __str__(self) -> str:
        return f"{self.base}[1/{self.witness}]"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def is_field(self) -> bool:
        return self.base.is_field

    @property
    def contains_field(self) -> bool:
        return self.base.contains_field

    # ------------------------------------------------------------ 轉換

    def __call__(self, value: Any) -> RingElem:
        if isinstance(value, RingElem) and value.domain == self.base:
            return self.localize(value)
        return super().__call__(value)

    def localize(self, x: RingElem) -> RingElem:
        """A → A_a"""
        return RingElem(self, self._canon(self.base(x), 0))

    def _canon(self, numerator: RingElem, apower: int) -> LocalizedElem:
        if numerator.is_zero:
            return LocalizedElem(numerator, 0)
        a = self.witness
        while apower > 0:
            q = numerator.try_exquo(a)
            if q is None:
                break
            numerator, apower = q, apower - 1
        return LocalizedElem(numerator, apower)

    def _apow(self, k: int) -> RingElem:
        return self.witness ** k

    def _convert(self, value: Any) -> LocalizedElem:
        if isinstance(value, LocalizedElem):
            return self._canon(value.numerator, value.apower)
        return self._canon(self.base(value), 0)

    # ------------------------------------------------------------ 環運算

    def _zero(self):
        return LocalizedElem(self.base.zero(), 0)

    def _one(self):
        return LocalizedElem(self.base.one(), 0)

    def _is_zero(self, x):
        return x.numerator.is_zero

    def _common(self, x: LocalizedElem, y: LocalizedElem) -> Tuple[RingElem, RingElem, int]:
        k = max(x.apower, y.apower)
        return (x.numerator * self._apow(k - x.apower),
                y.numerator * self._apow(k - y.apower), k)

    def _add(self, x, y):
        xs, ys, k = self._common(x, y)
        return self._canon(xs + ys, k)

    def _neg(self, x):
        return LocalizedElem(-x.numerator, x.apower)

    def _mul(self, x, y):
        return self._canon(x.numerator * y.numerator, x.apower + y.apower)

    # ------------------------------------------------------------ gcd 類

    def core(self, x: RingElem) -> RingElem:
        """A_a 元素在 A 中的 core（除去 a 的因子後的分子）"""
        return strip_witness_parts(x.payload.numerator, self.witness)[0]

    def _exquo(self, x, y):
        core_y, d_y, j = strip_witness_parts(y.numerator, self.witness)
        q = x.numerator.try_exquo(core_y)
        if q is None:
            return None
        e_y = self._apow(j).exquo(d_y)
        return self._canon(q * self._apow(y.apower) * e_y, x.apower + j)

    def _ext_gcd(self, x, y):
        xs, ys, k = self._common(x, y)
        g, u, v = ext_gcd(xs, ys)
        core, d, j = strip_witness_parts(g, self.witness)
        s = core.unit_normal()
        # g/a^k = u·x + v·y，core = g/d，且 (a^j/d)·d = a^j
        scale = self._apow(j).exquo(d) * self._apow(k) * s
        return (LocalizedElem(core * s, 0),
                self._canon(u * scale, j),
                self._canon(v * scale, j))

    def _unit_normal(self, x):
        core, d, j = strip_witness_parts(x.numerator, self.witness)
        s = core.unit_normal()
        return self._canon(self._apow(j).exquo(d) * self._apow(x.apower) * s, j)

    def _is_unit(self, x):
        return strip_witness_parts(x.numerator, self.witness)[0].is_unit

    def _sort_key(self, x):
        return (x.apower, x.numerator.sort_key())

    def _format(self, x):
        if x.apower == 0:
            return str(x.numerator)
        power = f"{self.witness}" if x.apower == 1 else f"{self.witness}^{x.apower}"
        return f"({x.numerator})/({power})"

