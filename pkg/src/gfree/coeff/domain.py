"""
係數環（coefficient domain）

提供支援的 Euclidean 係數環 A 及其元素：
- ℤ（Python int，gcd 由 sympy 的 ZZ.gcdex 計算）
- ℚ（fractions.Fraction）
- 𝔽_p（[0, p) 內的 int）
- 𝔽_p[t]、ℚ[t]（稠密係數 tuple，運算交給 sympy.Poly）
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Tuple

import sympy
from sympy import Poly, Rational, Symbol, isprime


class CoeffError(ValueError):
    """係數運算錯誤"""
    pass


class DomainMismatchError(CoeffError):
    """兩個元素不屬於同一個係數環"""
    pass


class DomainKind(Enum):
    """係數環種類"""
    INTEGERS = "ZZ"
    RATIONALS = "QQ"
    PRIME_FIELD = "GF"
    POLY_OVER_PRIME_FIELD = "GF[t]"
    POLY_OVER_RATIONALS = "QQ[t]"
    LOCALIZED = "A_a"


class CoeffDomain(ABC):
    """
    係數環 A 的抽象介面

    子類別只處理 payload（不含 domain 參照的原始值）；對外一律透過
    :class:`RingElem` 操作。所有 domain 皆為不可變、可雜湊的值物件。

    Example:
        >>> ZZ = IntegerDomain()
        >>> ZZ(6) * ZZ(7)
        RingElem(ZZ, 42)
    """

    kind: DomainKind

    # ------------------------------------------------------------ 屬性

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def is_field(self) -> bool:
        return False

    @property
    def contains_field(self) -> bool:
        """A 是否包含一個體（square-free 自由性結論的前提）"""
        return self.is_field

    # ------------------------------------------------------------ 建構

    def __call__(self, value: Any) -> "RingElem":
        if isinstance(value, RingElem):
            if value.domain != self:
                raise DomainMismatchError(f"無法將 {value.domain} 的元素轉為 {self}")
            return value
        return RingElem(self, self._convert(value))

    def zero(self) -> "RingElem":
        return RingElem(self, self._zero())

    def one(self) -> "RingElem":
        return RingElem(self, self._one())

    # ------------------------------------------------------------ payload 介面

    @abstractmethod
    def _convert(self, value: Any) -> Any: ...

    @abstractmethod
    def _zero(self) -> Any: ...

    @abstractmethod
    def _one(self) -> Any: ...

    @abstractmethod
    def _add(self, a: Any, b: Any) -> Any: ...

    @abstractmethod
    def _neg(self, a: Any) -> Any: ...

    @abstractmethod
    def _mul(self, a: Any, b: Any) -> Any: ...

    def _sub(self, a: Any, b: Any) -> Any:
        return self._add(a, self._neg(b))

    def _is_zero(self, a: Any) -> bool:
        return a == self._zero()

    @abstractmethod
    def _exquo(self, a: Any, b: Any) -> Optional[Any]:
        """a / b（整除時），否則 None；b 非零"""

    @abstractmethod
    def _ext_gcd(self, a: Any, b: Any) -> Tuple[Any, Any, Any]:
        """(g, u, v) 使 g = u·a + v·b，g 已單位正規化；a, b 不同時為零"""

    @abstractmethod
    def _unit_normal(self, a: Any) -> Any:
        """回傳單位 u 使 u·a 為正規形式（a 非零）"""

    @abstractmethod
    def _is_unit(self, a: Any) -> bool: ...

    @abstractmethod
    def _format(self, a: Any) -> str: ...

    def _pow(self, a: Any, n: int) -> Any:
        result = self._one()
        base = a
        while n:
            if n & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            n >>= 1
        return result

    def _sort_key(self, a: Any) -> Any:
        return a


class RingElem:
    """
    係數環中的元素（domain 參照 + 正規形式 payload）

    不可變；相等與雜湊以 (domain, payload) 為準。
    """

    __slots__ = ("domain", "payload")

    def __init__(self, domain: CoeffDomain, payload: Any):
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "payload", payload)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem 為不可變物件")

    # ------------------------------------------------------------ helpers

    def _coerce(self, other: Any) -> "RingElem":
        if isinstance(other, RingElem):
            if other.domain != self.domain:
                raise DomainMismatchError(
                    f"係數環不一致: {self.domain} 與 {other.domain}"
                )
            return other
        return self.domain(other)

    # ------------------------------------------------------------ 算術

    def __add__(self, other: Any) -> "RingElem":
        other = self._coerce(other)
        return RingElem(self.domain, self.domain._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "RingElem":
        other = self._coerce(other)
        return RingElem(self.domain, self.domain._sub(self.payload, other.payload))

    def __rsub__(self, other: Any) -> "RingElem":
        return self._coerce(other) - self

    def __neg__(self) -> "RingElem":
        return RingElem(self.domain, self.domain._neg(self.payload))

    def __mul__(self, other: Any) -> "RingElem":
        other = self._coerce(other)
        return RingElem(self.domain, self.domain._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingElem":
        if n < 0:
            raise CoeffError("不支援負指數")
        return RingElem(self.domain, self.domain._pow(self.payload, n))

    def exquo(self, other: Any) -> "RingElem":
        """精確除法；不整除時拋出 CoeffError"""
        q = self.try_exquo(other)
        if q is None:
            raise CoeffError(f"{other} 不整除 {self}")
        return q

    def try_exquo(self, other: Any) -> Optional["RingElem"]:
        """精確除法；不整除時回傳 None"""
        other = self._coerce(other)
        if other.is_zero:
            raise CoeffError("除以零")
        q = self.domain._exquo(self.payload, other.payload)
        return None if q is None else RingElem(self.domain, q)

    def divides(self, other: Any) -> bool:
        """self | other"""
        other = self._coerce(other)
        if self.is_zero:
            return other.is_zero
        return other.try_exquo(self) is not None

    # ------------------------------------------------------------ 性質

    @property
    def is_zero(self) -> bool:
        return self.domain._is_zero(self.payload)

    @property
    def is_unit(self) -> bool:
        return not self.is_zero and self.domain._is_unit(self.payload)

    def unit_normal(self) -> "RingElem":
        """單位 u，使 u·self 為正規形式（正數／monic／1）"""
        if self.is_zero:
            return self.domain.one()
        return RingElem(self.domain, self.domain._unit_normal(self.payload))

    def normalized(self) -> "RingElem":
        return self * self.unit_normal()

    def sort_key(self) -> Any:
        return self.domain._sort_key(self.payload)

    # ------------------------------------------------------------ dunder

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, RingElem):
            return self.domain == other.domain and self.payload == other.payload
        try:
            return self.payload == self.domain._convert(other)
        except (CoeffError, TypeError, ValueError):
            return False

    def __hash__(self) -> int:
        return hash((self.domain, self.payload))

    def __str__(self) -> str:
        return self.domain._format(self.payload)

    def __repr__(self) -> str:
        return f"RingElem({self.domain}, {self})"


# ============================================================ ℤ


@dataclass(frozen=True)
class IntegerDomain(CoeffDomain):
    """整數環 ℤ"""

    kind = DomainKind.INTEGERS

    def __str__(self) -> str:
        return "ZZ"

    def _convert(self, value: Any) -> int:
        if isinstance(value, bool):
            raise CoeffError("不接受布林值作為係數")
        if isinstance(value, int):
            return value
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        raise CoeffError(f"無法將 {value!r} 轉為整數")

    def _zero(self) -> int:
        return 0

    def _one(self) -> int:
        return 1

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _pow(self, a, n):
        return a ** n

    def _exquo(self, a, b):
        q, r = divmod(a, b)
        return q if r == 0 else None

    def _ext_gcd(self, a, b):
        u, v, _ = (int(c) for c in sympy.ZZ.gcdex(a, b))
        g = u * a + v * b
        if g < 0:
            u, v, g = -u, -v, -g
        return g, u, v

    def _unit_normal(self, a):
        return -1 if a < 0 else 1

    def _is_unit(self, a):
        return a in (1, -1)

    def _format(self, a):
        return str(a)


# ============================================================ ℚ


@dataclass(frozen=True)
class RationalDomain(CoeffDomain):
    """有理數體 ℚ"""

    kind = DomainKind.RATIONALS

    def __str__(self) -> str:
        return "QQ"

    @property
    def is_field(self) -> bool:
        return True

    def _convert(self, value: Any) -> Fraction:
        if isinstance(value, bool):
            raise CoeffError("不接受布林值作為係數")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        if isinstance(value, Rational):
            return Fraction(int(value.p), int(value.q))
        raise CoeffError(f"無法將 {value!r} 轉為有理數")

    def _zero(self):
        return Fraction(0)

    def _one(self):
        return Fraction(1)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _pow(self, a, n):
        return a ** n

    def _exquo(self, a, b):
        return a / b

    def _ext_gcd(self, a, b):
        if a != 0:
            return Fraction(1), 1 / a, Fraction(0)
        return Fraction(1), Fraction(0), 1 / b

    def _unit_normal(self, a):
        return 1 / a

    def _is_unit(self, a):
        return a != 0

    def _format(self, a):
        return str(a)


# ============================================================ 𝔽_p


@dataclass(frozen=True)
class PrimeFieldDomain(CoeffDomain):
    """有限體 𝔽_p（p 為質數）"""

    p: int
    kind = DomainKind.PRIME_FIELD

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise CoeffError(f"GF(p) 需要質數 p，收到 {self.p!r}")

    def __str__(self) -> str:
        return f"GF({self.p})"

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_field(self) -> bool:
        return True

    def _convert(self, value: Any) -> int:
        if isinstance(value, bool):
            raise CoeffError("不接受布林值作為係數")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise CoeffError(f"分母 {value.denominator} 在 GF({self.p}) 中不可逆")
            return value.numerator * pow(den, -1, self.p) % self.p
        raise CoeffError(f"無法將 {value!r} 轉為 GF({self.p}) 元素")

    def _zero(self):
        return 0

    def _one(self):
        return 1

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _neg(self, a):
        return -a % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _pow(self, a, n):
        return pow(a, n, self.p)

    def _exquo(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def _ext_gcd(self, a, b):
        if a != 0:
            return 1, pow(a, -1, self.p), 0
        return 1, 0, pow(b, -1, self.p)

    def _unit_normal(self, a):
        return pow(a, -1, self.p)

    def _is_unit(self, a):
        return a != 0

    def _format(self, a):
        return str(a)


# ============================================================ k[t]


@dataclass(frozen=True)
class UnivariatePolyDomain(CoeffDomain):
    """
    單變數多項式環 k[var]，k 為 ℚ 或 𝔽_p

    payload 為降冪排列的係數 tuple（首項非零；零多項式為空 tuple），
    乘法、帶餘除法與 gcdex 交由 sympy.Poly 計算。
    """

    base: CoeffDomain
    var: str = "t"

    def __post_init__(self):
        if not isinstance(self.base, (RationalDomain, PrimeFieldDomain)):
            raise CoeffError("k[t] 的係數體僅支援 QQ 或 GF(p)")

    @property
    def kind(self) -> DomainKind:
        if isinstance(self.base, PrimeFieldDomain):
            return DomainKind.POLY_OVER_PRIME_FIELD
        return DomainKind.POLY_OVER_RATIONALS

    def __str__(self) -> str:
        return f"{self.base}[{self.var}]"

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def contains_field(self) -> bool:
        return True

    # ------------------------------------------------------------ sympy 橋接

    @property
    def symbol(self) -> Symbol:
        return Symbol(self.var)

    def _to_poly(self, a: Tuple) -> Poly:
        if isinstance(self.base, PrimeFieldDomain):
            return Poly(list(a) or [0], self.symbol, modulus=self.base.p)
        coeffs = [Rational(c.numerator, c.denominator) for c in a] or [0]
        return Poly(coeffs, self.symbol, domain=sympy.QQ)

    def _from_poly(self, poly: Poly) -> Tuple:
        if poly.is_zero:
            return ()
        return tuple(self.base._convert(self._scalar(c)) for c in poly.all_coeffs())

    @staticmethod
    def _scalar(c) -> Any:
        if isinstance(c, Rational) and not c.is_Integer:
            return Fraction(int(c.p), int(c.q))
        return int(c)

    # ------------------------------------------------------------ payload 介面

    def _convert(self, value: Any) -> Tuple:
        if isinstance(value, (list, tuple)):
            coeffs = [self.base._convert(c) for c in value]
            while coeffs and coeffs[0] == self.base._zero():
                coeffs.pop(0)
            return tuple(coeffs)
        if isinstance(value, Poly):
            return self._from_poly(value)
        c = self.base._convert(value)
        return () if c == self.base._zero() else (c,)

    def _zero(self):
        return ()

    def _one(self):
        return (self.base._one(),)

    def _add(self, a, b):
        return self._from_poly(self._to_poly(a) + self._to_poly(b))

    def _sub(self, a, b):
        return self._from_poly(self._to_poly(a) - self._to_poly(b))

    def _neg(self, a):
        return tuple(self.base._neg(c) for c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        return self._from_poly(self._to_poly(a) * self._to_poly(b))

    def _pow(self, a, n):
        return self._from_poly(self._to_poly(a) ** n)

    def _exquo(self, a, b):
        q, r = self._to_poly(a).div(self._to_poly(b))
        return self._from_poly(q) if r.is_zero else None

    def _ext_gcd(self, a, b):
        if not a:
            return self._mul(b, self._unit_normal(b)), (), self._unit_normal(b)
        if not b:
            return self._mul(a, self._unit_normal(a)), self._unit_normal(a), ()
        s, t, h = self._to_poly(a).gcdex(self._to_poly(b))
        return self._from_poly(h), self._from_poly(s), self._from_poly(t)

    def _unit_normal(self, a):
        return (self.base._unit_normal(a[0]),)

    def _is_unit(self, a):
        return len(a) == 1

    def _sort_key(self, a):
        return (len(a), a)

    def degree(self, a: "RingElem") -> int:
        return len(a.payload) - 1

    def evaluate(self, a: "RingElem", point: Any) -> "RingElem":
        """代入 var = point，回傳係數體 k 中的元素"""
        value = self._to_poly(a.payload).eval(self._sympify_scalar(point))
        return self.base(self._scalar(value))

    def _sympify_scalar(self, point: Any):
        c = self.base._convert(point)
        if isinstance(c, Fraction):
            return Rational(c.numerator, c.denominator)
        return c

    def _format(self, a):
        if not a:
            return "0"
        parts = []
        degree = len(a) - 1
        for i, c in enumerate(a):
            if c == self.base._zero():
                continue
            e = degree - i
            negative = isinstance(c, Fraction) and c < 0
            mag = -c if negative else c
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{body}" if negative else body)
            else:
                parts.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(parts)


# ============================================================ 工廠


def make_domain(kind: DomainKind, p: Optional[int] = None, var: str = "t") -> CoeffDomain:
    """依種類建立係數環"""
    if kind is DomainKind.INTEGERS:
        return IntegerDomain()
    if kind is DomainKind.RATIONALS:
        return RationalDomain()
    if kind is DomainKind.PRIME_FIELD:
        return PrimeFieldDomain(p)
    if kind is DomainKind.POLY_OVER_PRIME_FIELD:
        return UnivariatePolyDomain(PrimeFieldDomain(p), var)
    if kind is DomainKind.POLY_OVER_RATIONALS:
        return UnivariatePolyDomain(RationalDomain(), var)
    raise CoeffError(f"不支援的係數環種類: {kind}")
