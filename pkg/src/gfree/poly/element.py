"""
項（Term）、自由模 F = ⊕ R e_i 與其元素（FreeElem）

多項式環 R 本身視為秩 1 的自由模。FreeElem 為不可變物件，
項依所屬模的單項式序由大到小排列。
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..coeff import CoeffDomain, DomainKind, RingElem
from .grading import Grading
from .monomial import Monomial, format_monomial, mono_divides, mono_div, mono_mul, mono_one
from .order import OrderError, OrderSpec, PolyError

TermKey = Tuple[Monomial, int]


@dataclass(frozen=True)
class Term:
    """係數 · 單項式 · 基底向量 e_basis（basis 從 1 起算）"""

    coeff: RingElem
    mono: Monomial
    basis: int = 1

    def __post_init__(self):
        object.__setattr__(self, "mono", tuple(self.mono))
        if self.coeff.is_zero:
            raise PolyError("項的係數不可為零")
        if self.basis < 1:
            raise PolyError(f"基底索引必須 >= 1，收到 {self.basis}")

    @property
    def key(self) -> TermKey:
        return self.mono, self.basis

    def times(self, coeff: RingElem, mono: Monomial) -> "Term":
        """乘上環中的項 coeff · mono"""
        return Term(self.coeff * coeff, mono_mul(self.mono, mono), self.basis)

    def divides(self, other: "Term") -> bool:
        """單項式部分 self | other 且基底相同（不看係數）"""
        return self.basis == other.basis and mono_divides(self.mono, other.mono)

    def __mul__(self, other: "Term") -> "Term":
        # 環中的項（basis 1）乘上模中的項
        return Term(self.coeff * other.coeff, mono_mul(self.mono, other.mono), other.basis)


@dataclass(frozen=True)
class FreeModule:
    """
    係數環 A 上多項式環 R = A[x_1..x_r] 的自由模 R^rank 與其單項式序

    Example:
        >>> ZZ = IntegerDomain()
        >>> R = FreeModule(ZZ, ("x", "y"))
        >>> f = R.from_dict({((1, 0), 1): 2, ((0, 1), 1): 1})
        >>> str(f)
        '2*x + y'
    """

    domain: CoeffDomain
    variables: Tuple[str, ...]
    rank: int = 1
    order: OrderSpec = field(default_factory=OrderSpec)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if self.rank < 1:
            raise PolyError(f"模秩必須 >= 1，收到 {self.rank}")
        if len(set(self.variables)) != len(self.variables):
            raise PolyError(f"變數名稱重複: {self.variables}")
        self.order.validate(len(self.variables), self.rank)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    # ------------------------------------------------------------ 衍生模

    def ring(self) -> "FreeModule":
        """係數環與變數相同的多項式環（秩 1，不帶平移）"""
        order = self.order
        if order.shifts is not None:
            order = OrderSpec(order.base, order.permutation, order.weights, None)
        return FreeModule(self.domain, self.variables, 1, order)

    def with_domain(self, domain: CoeffDomain) -> "FreeModule":
        return FreeModule(domain, self.variables, self.rank, self.order)

    def with_order(self, order: OrderSpec) -> "FreeModule":
        return FreeModule(self.domain, self.variables, self.rank, order)

    # ------------------------------------------------------------ 建構

    def key(self, mono: Monomial, basis: int = 1) -> tuple:
        return self.order.key(mono, basis)

    def zero(self) -> "FreeElem":
        return FreeElem(self, ())

    def term(self, coeff, mono: Monomial = None, basis: int = 1) -> Term:
        mono = mono_one(self.nvars) if mono is None else tuple(mono)
        return Term(self.domain(coeff), mono, basis)

    def monomial(self, mono: Monomial = None, basis: int = 1, coeff=1) -> "FreeElem":
        return FreeElem(self, [self.term(coeff, mono, basis)])

    def basis_vector(self, basis: int) -> "FreeElem":
        return self.monomial(None, basis)

    def variable(self, name: str) -> "FreeElem":
        index = self.variables.index(name)
        mono = tuple(1 if i == index else 0 for i in range(self.nvars))
        return self.monomial(mono)

    def from_dict(self, mapping: Dict[TermKey, object]) -> "FreeElem":
        """{(monomial, basis): coeff} → FreeElem；零係數略去"""
        terms = []
        for (mono, basis), coeff in mapping.items():
            c = self.domain(coeff)
            if not c.is_zero:
                terms.append(Term(c, tuple(mono), basis))
        return FreeElem(self, terms)

    def element(self, terms: Iterable[Term]) -> "FreeElem":
        return FreeElem(self, terms)


class FreeElem:
    """
    自由模元素：依序由大到小的項列表

    建構時合併同類項、捨棄零係數並排序。
    """

    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: Iterable[Term] = ()):
        merged: Dict[TermKey, RingElem] = {}
        for term in terms:
            if len(term.mono) != module.nvars:
                raise OrderError(
                    f"單項式維度 {len(term.mono)} 與變數數 {module.nvars} 不符"
                )
            if term.basis > module.rank:
                raise PolyError(f"基底索引 {term.basis} 超出模秩 {module.rank}")
            if term.coeff.domain != module.domain:
                raise PolyError(f"係數環 {term.coeff.domain} 與模的係數環 {module.domain} 不符")
            key = term.key
            merged[key] = merged[key] + term.coeff if key in merged else term.coeff
        ordered = sorted(
            (Term(c, mono, basis) for (mono, basis), c in merged.items() if not c.is_zero),
            key=lambda t: module.key(t.mono, t.basis),
            reverse=True,
        )
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "terms", tuple(ordered))

    def __setattr__(self, name, value):
        raise AttributeError("FreeElem 為不可變物件")

    # ------------------------------------------------------------ 基本性質

    @property
    def domain(self) -> CoeffDomain:
        return self.module.domain

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def leading_term(self) -> Term:
        """
        依模的單項式序取首項

        Raises:
            PolyError: 零元素沒有首項
        """
        if not self.terms:
            raise PolyError("零元素沒有首項")
        return self.terms[0]

    def to_dict(self) -> Dict[TermKey, RingElem]:
        return {t.key: t.coeff for t in self.terms}

    def coefficient(self, mono: Monomial, basis: int = 1) -> RingElem:
        for t in self.terms:
            if t.mono == tuple(mono) and t.basis == basis:
                return t.coeff
        return self.domain.zero()

    def components(self) -> List["FreeElem"]:
        """依基底分量拆成 ℓ 個多項式（環元素）"""
        ring = self.module.ring()
        return [FreeElem(ring, [Term(t.coeff, t.mono, 1) for t in self.terms if t.basis == k])
                for k in range(1, self.module.rank + 1)]

    # ------------------------------------------------------------ 算術

    def _check(self, other: "FreeElem") -> None:
        if not isinstance(other, FreeElem):
            raise PolyError(f"無法與 {type(other).__name__} 運算")
        if other.module != self.module:
            raise OrderError("兩個元素所屬的自由模或單項式序不同")

    def __add__(self, other: "FreeElem") -> "FreeElem":
        self._check(other)
        return FreeElem(self.module, self.terms + other.terms)

    def __sub__(self, other: "FreeElem") -> "FreeElem":
        self._check(other)
        return FreeElem(self.module, self.terms + tuple(
            Term(-t.coeff, t.mono, t.basis) for t in other.terms))

    def __neg__(self) -> "FreeElem":
        return FreeElem(self.module, (Term(-t.coeff, t.mono, t.basis) for t in self.terms))

    def scale(self, c) -> "FreeElem":
        c = self.domain(c)
        if c.is_zero:
            return self.module.zero()
        return FreeElem(self.module, (Term(t.coeff * c, t.mono, t.basis) for t in self.terms))

    def mul_term(self, coeff, mono: Monomial) -> "FreeElem":
        """乘上環中的項 coeff · mono"""
        coeff = self.domain(coeff)
        if coeff.is_zero:
            return self.module.zero()
        return FreeElem(self.module, (t.times(coeff, mono) for t in self.terms))

    def mul_poly(self, f: "FreeElem") -> "FreeElem":
        """乘上多項式 f ∈ R（f 必須是秩 1 的環元素）"""
        if f.module.rank != 1 or f.domain != self.domain or f.module.variables != self.module.variables:
            raise PolyError("乘數必須是同一多項式環中的元素")
        terms: List[Term] = []
        for s in f.terms:
            terms.extend(t.times(s.coeff, s.mono) for t in self.terms)
        return FreeElem(self.module, terms)

    def __mul__(self, other) -> "FreeElem":
        if isinstance(other, FreeElem):
            if self.module.rank == 1 and other.module.rank > 1:
                return other.mul_poly(self)
            return self.mul_poly(other)
        return self.scale(other)

    __rmul__ = __mul__

    def map_coefficients(self, module: FreeModule, fn: Callable[[RingElem], RingElem]) -> "FreeElem":
        """逐項轉換係數到另一個模（零像捨去）"""
        terms = []
        for t in self.terms:
            c = fn(t.coeff)
            if not c.is_zero:
                terms.append(Term(c, t.mono, t.basis))
        return FreeElem(module, terms)

    def map_terms(self, module: FreeModule, fn: Callable[[Term], Optional[Term]]) -> "FreeElem":
        """逐項轉換（回傳 None 表示捨去）"""
        return FreeElem(module, (u for u in (fn(t) for t in self.terms) if u is not None))

    def reorder(self, module: FreeModule) -> "FreeElem":
        """同樣的項放到另一個（只有單項式序不同的）模中"""
        return FreeElem(module, self.terms)

    def is_homogeneous(self, grading: Grading) -> bool:
        degrees = {grading.degree(t.mono, t.basis) for t in self.terms}
        return len(degrees) <= 1

    def monomial_divides_lead(self, term: Term) -> bool:
        lead = self.leading_term()
        return lead.basis == term.basis and mono_divides(lead.mono, term.mono)

    def quotient_monomial(self, term: Term) -> Monomial:
        return mono_div(term.mono, self.leading_term().mono)

    # ------------------------------------------------------------ dunder

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElem):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.module, self.terms))

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"FreeElem({self})"


# ============================================================ 格式化


def _is_negative(c: RingElem) -> bool:
    """係數是否以負號開頭；k[t] 只看常數、局部化只看分母為 1 者"""
    kind = c.domain.kind
    if kind in (DomainKind.INTEGERS, DomainKind.RATIONALS):
        return c.payload < 0
    if kind is DomainKind.POLY_OVER_RATIONALS:
        return len(c.payload) == 1 and c.payload[0] < 0
    if kind is DomainKind.LOCALIZED and c.payload.apower == 0:
        return _is_negative(c.payload.numerator)
    return False


def format_coefficient(c: RingElem) -> str:
    """係數字面值；k[t] 的非常數係數加上大括號"""
    text = str(c)
    if c.domain.kind in (DomainKind.POLY_OVER_PRIME_FIELD, DomainKind.POLY_OVER_RATIONALS):
        if not c.is_zero and len(c.payload) > 1:
            return "{" + text + "}"
    if c.domain.kind is DomainKind.LOCALIZED and c.payload.apower == 0:
        return format_coefficient(c.payload.numerator)
    return text


def format_term(term: Term, variables: Sequence[str], rank: int) -> Tuple[bool, str]:
    """回傳 (是否為負, 去掉正負號後的文字)"""
    coeff = term.coeff
    negative = _is_negative(coeff)
    if negative:
        coeff = -coeff
    factors = []
    mono_text = format_monomial(term.mono, variables)
    basis_text = f"e{term.basis}" if rank > 1 else ""
    if coeff != coeff.domain.one() or not (mono_text or basis_text):
        factors.append(format_coefficient(coeff))
    if mono_text:
        factors.append(mono_text)
    if basis_text:
        factors.append(basis_text)
    return negative, "*".join(factors)


def format_element(w: FreeElem) -> str:
    if w.is_zero:
        return "0"
    parts = []
    for i, term in enumerate(w.terms):
        negative, body = format_term(term, w.module.variables, w.module.rank)
        if i == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


def leading_term(w: FreeElem, order: Optional[OrderSpec] = None) -> Term:
    """
    首項；order 省略時使用元素所屬模的序

    Raises:
        PolyError: w 為零
    """
    if order is None or order == w.module.order:
        return w.leading_term()
    if w.is_zero:
        raise PolyError("零元素沒有首項")
    order.validate(w.module.nvars, w.module.rank)
    return max(w.terms, key=lambda t: order.key(t.mono, t.basis))
