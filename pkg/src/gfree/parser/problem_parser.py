"""
問題檔解析器

格式（空白不敏感，以 # 開頭的行為註解）：

    ring ZZ | QQ | GF(p) | GF(p)[t] | QQ[t]
    vars x y z
    order lex|grlex|grevlex [變數重要性排列]
    weights 1 2 3
    grading 1 1 1
    module 2 [平移 d_1 d_2]
    gens:
    2*x + y
    {t}*x^2*e1 - 3*y*e2
"""

import re
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from ..coeff import CoeffDomain, DomainKind, make_domain
from ..poly import BaseOrder, FreeElem, FreeModule, Grading, OrderError, OrderSpec, Term
from ..utils import FileUtils
from .coefficient_parser import CoefficientParser
from .tokenizer import EOL, IDENT, NUMBER, OP, ProblemParseError, TokenStream, tokenize_line


@dataclass
class ProblemFile:
    """
    解析後的問題

    Attributes:
        domain: 係數環 A
        variables: 變數名
        order: 單項式序
        grading: 明確指定的分次（None 表示標準分次）
        rank: 自由模秩 ℓ
        shifts: 基底平移 d_k（空表示全為 0）
        gens: 生成元
    """

    domain: CoeffDomain
    variables: Tuple[str, ...]
    order: OrderSpec
    grading: Optional[Grading]
    rank: int
    shifts: Tuple[int, ...]
    gens: List[FreeElem]

    @property
    def module(self) -> FreeModule:
        return FreeModule(self.domain, self.variables, self.rank, self.order)

    def effective_grading(self) -> Grading:
        if self.grading is not None:
            return self.grading
        return Grading((1,) * len(self.variables), self.shifts)

    def semantic(self) -> tuple:
        return (self.domain, self.variables, self.order, self.grading,
                self.rank, self.shifts, tuple(self.gens))


class ProblemParser:
    """
    解析問題檔

    Example:
        >>> parser = ProblemParser()
        >>> problem = parser.parse_content("ring ZZ\\nvars x y\\norder lex\\ngens:\\n2*x + y\\n3*x")
        >>> len(problem.gens)
        2
    """

    DOMAIN_PATTERN = re.compile(r'^(?:(?P<name>ZZ|QQ)|GF\((?P<p>\d+)\))(?:\[(?P<var>[A-Za-z_]\w*)\])?$')
    BASIS_PATTERN = re.compile(r'^e(\d+)$')
    STANZAS = ("vars", "order", "weights", "grading", "module")

    def parse(self, filepath: str, encoding: str = 'utf-8') -> ProblemFile:
        """
        解析問題檔（'-' 表示 stdin）

        Raises:
            FileNotFoundError: 檔案不存在
            ProblemParseError: 解析失敗
        """
        return self.parse_content(FileUtils.read_text(filepath, encoding))

    def parse_content(self, content: str) -> ProblemFile:
        lines = [(n, line) for n, line in enumerate(content.splitlines(), start=1)
                 if line.strip() and not line.strip().startswith('#')]
        if not lines:
            raise ProblemParseError(1, 0, "空的問題檔")

        n, first = lines[0]
        keyword, *rest = first.strip().split(None, 1)
        rest = rest[0] if rest else ""
        if keyword != "ring":
            raise ProblemParseError(n, 1, f"第一行必須是 ring 宣告，卻遇到 {keyword!r}")
        domain = self._parse_domain(rest, n, first.index("ring") + 5)

        stanzas: Dict[str, Tuple[int, list]] = {}
        gens_at = None
        for index, (n, line) in enumerate(lines[1:], start=1):
            stripped = line.strip()
            if stripped.startswith("gens"):
                tokens = tokenize_line(line, n)
                stream = TokenStream(tokens)
                stream.expect(IDENT, "gens")
                stream.expect(OP, ":")
                gens_at = index
                break
            keyword = stripped.split()[0]
            if keyword not in self.STANZAS:
                raise ProblemParseError(n, line.index(keyword) + 1, f"未知的宣告 {keyword!r}")
            if keyword in stanzas:
                raise ProblemParseError(n, 1, f"重複的宣告 {keyword!r}")
            tokens = tokenize_line(line, n)
            stanzas[keyword] = (n, tokens[1:])
        if gens_at is None:
            raise ProblemParseError(lines[-1][0] + 1, 0, "缺少 gens: 區段")

        variables = self._parse_vars(stanzas, domain)
        rank, shifts = self._parse_module(stanzas)
        order = self._parse_order(stanzas, variables, rank)
        grading = self._parse_grading(stanzas, variables, shifts)
        module = FreeModule(domain, variables, rank, order)

        gens = []
        gen_lines = list(lines[gens_at:])
        n, line = gen_lines[0]
        tail = line[line.index(":") + 1:]
        gen_lines[0] = (n, " " * (line.index(":") + 1) + tail)
        for n, line in gen_lines:
            if not line.strip():
                continue
            gens.append(ElementParser(module).parse_line(line, n, allow_zero=False))
        if not gens:
            raise ProblemParseError(lines[-1][0] + 1, 0, "gens: 之後至少需要一個生成元")
        return ProblemFile(domain, variables, order, grading, rank, shifts, gens)

    # ------------------------------------------------------------ 宣告

    def _parse_domain(self, text: str, line: int, column: int) -> CoeffDomain:
        compact = re.sub(r'\s+', '', text)
        match = self.DOMAIN_PATTERN.match(compact)
        if match is None:
            raise ProblemParseError(line, column, f"無法辨識的係數環 {text.strip()!r}")
        var = match.group("var")
        if match.group("name") == "ZZ":
            if var:
                raise ProblemParseError(line, column, "ZZ[t] 不是 Euclidean 環，不支援")
            return make_domain(DomainKind.INTEGERS)
        if match.group("name") == "QQ":
            if var:
                return make_domain(DomainKind.POLY_OVER_RATIONALS, var=var)
            return make_domain(DomainKind.RATIONALS)
        p = int(match.group("p"))
        if not isprime(p):
            raise ProblemParseError(line, column, f"GF({p}) 的 {p} 不是質數")
        if var:
            return make_domain(DomainKind.POLY_OVER_PRIME_FIELD, p, var)
        return make_domain(DomainKind.PRIME_FIELD, p)

    def _parse_vars(self, stanzas, domain: CoeffDomain) -> Tuple[str, ...]:
        if "vars" not in stanzas:
            raise ProblemParseError(1, 0, "缺少 vars 宣告")
        line, tokens = stanzas["vars"]
        names: List[str] = []
        coeff_var = getattr(domain, "var", None)
        for token in tokens:
            if token.kind == EOL:
                break
            if token.kind == OP and token.text == ",":
                continue
            if token.kind != IDENT:
                raise ProblemParseError(line, token.column, f"變數名無效: {token.text!r}")
            if token.text in names:
                raise ProblemParseError(line, token.column, f"變數 {token.text!r} 重複宣告")
            if self.BASIS_PATTERN.match(token.text) or token.text == "gens":
                raise ProblemParseError(line, token.column, f"{token.text!r} 是保留字，不能作為變數名")
            if token.text == coeff_var:
                raise ProblemParseError(line, token.column, f"{token.text!r} 已是係數環的變數")
            names.append(token.text)
        if not names:
            raise ProblemParseError(line, 0, "vars 至少需要一個變數")
        return tuple(names)

    @staticmethod
    def _integers(line: int, tokens, allow_negative: bool = False) -> List[int]:
        stream = TokenStream(tokens)
        values = []
        while not stream.at(EOL):
            if stream.accept(OP, ","):
                continue
            sign = -1 if allow_negative and stream.accept(OP, "-") else 1
            values.append(sign * int(stream.expect(NUMBER, what="整數").text))
        return values

    def _parse_module(self, stanzas) -> Tuple[int, Tuple[int, ...]]:
        if "module" not in stanzas:
            return 1, ()
        line, tokens = stanzas["module"]
        values = self._integers(line, tokens, allow_negative=True)
        if not values or values[0] < 1:
            raise ProblemParseError(line, 0, "module 需要正整數秩")
        rank, shifts = values[0], tuple(values[1:])
        if shifts and len(shifts) != rank:
            raise ProblemParseError(line, 0, f"平移個數 {len(shifts)} 與秩 {rank} 不符")
        return rank, shifts

    def _parse_order(self, stanzas, variables: Tuple[str, ...], rank: int) -> OrderSpec:
        weights = None
        if "weights" in stanzas:
            line, tokens = stanzas["weights"]
            weights = tuple(self._integers(line, tokens))
            if len(weights) != len(variables):
                raise ProblemParseError(line, 0, f"weights 需要 {len(variables)} 個整數")
        if "order" not in stanzas:
            return OrderSpec(BaseOrder.LEX, None, weights)
        line, tokens = stanzas["order"]
        stream = TokenStream(tokens)
        name = stream.expect(IDENT, what="lex、grlex 或 grevlex")
        try:
            base = BaseOrder[name.text.upper()]
        except KeyError:
            raise ProblemParseError(line, name.column, f"未知的單項式序 {name.text!r}")
        perm: List[int] = []
        while not stream.at(EOL):
            if stream.accept(OP, ","):
                continue
            token = stream.next()
            if token.kind == IDENT and token.text in variables:
                perm.append(variables.index(token.text))
            elif token.kind == NUMBER and 1 <= int(token.text) <= len(variables):
                perm.append(int(token.text) - 1)
            else:
                raise ProblemParseError(line, token.column, f"排列中的 {token.text!r} 不是變數")
        order = OrderSpec(base, tuple(perm) if perm else None, weights)
        try:
            order.validate(len(variables), rank)
        except OrderError as e:
            raise ProblemParseError(line, 0, str(e))
        return order

    def _parse_grading(self, stanzas, variables, shifts) -> Optional[Grading]:
        if "grading" not in stanzas:
            return None
        line, tokens = stanzas["grading"]
        weights = tuple(self._integers(line, tokens))
        if len(weights) != len(variables) or any(w <= 0 for w in weights):
            raise ProblemParseError(line, 0, f"grading 需要 {len(variables)} 個正整數")
        return Grading(weights, shifts)


class ElementParser(CoefficientParser):
    """
    解析自由模元素（一行一個）

    term := 係數? ('*'? 變數 ('^' 整數)?)* 基底?
    係數 := 整數 | 整數/整數 | '{' 係數變數的多項式 '}'
    """

    def __init__(self, module: FreeModule):
        super().__init__(module.domain)
        self.module = module
        self.index = {name: i for i, name in enumerate(module.variables)}

    def parse_line(self, text: str, line: int = 1, allow_zero: bool = True) -> FreeElem:
        """
        Raises:
            ProblemParseError: 語法錯誤，或未知變數、基底超出範圍、零係數字面值
        """
        stream = TokenStream(tokenize_line(text, line))
        if stream.at(EOL):
            raise stream.error("空的多項式")
        terms: List[Term] = []
        zero_literal = False
        first = True
        while first or stream.at(OP, "+") or stream.at(OP, "-"):
            sign = self._signs(stream)
            if stream.at(NUMBER, "0") and self._lone_zero(stream):
                zero_literal = True
                stream.next()
            else:
                terms.append(self._term(stream, sign))
            first = False
        if not stream.at(EOL):
            raise stream.error("預期 '+' 或 '-'")
        element = FreeElem(self.module, terms)
        if element.is_zero and not allow_zero:
            raise ProblemParseError(line, 0, "生成元為零")
        if zero_literal and terms:
            raise ProblemParseError(line, 0, "係數字面值不可為零")
        return element

    @staticmethod
    def _lone_zero(stream: TokenStream) -> bool:
        following = stream.tokens[stream.pos + 1]
        return following.kind == EOL or (following.kind == OP and following.text in "+-")

    def _term(self, stream: TokenStream, sign: int) -> Term:
        start = stream.peek()
        coeff = self.domain.one()
        mono = [0] * self.module.nvars
        basis: Optional[int] = None
        parts = 0
        dangling_star = False
        while True:
            token = stream.peek()
            is_atom = token.kind in (NUMBER, IDENT) or (token.kind == OP and token.text == "{")
            if not is_atom:
                if parts == 0 or dangling_star:
                    raise stream.error("預期係數、變數或基底")
                break
            if basis is not None:
                raise stream.error("基底 e<k> 必須寫在項的最後")
            if token.kind == IDENT:
                basis = self._factor(stream, mono)
            else:
                if parts:
                    raise stream.error("係數必須寫在項的開頭")
                coeff = self._coefficient(stream)
            parts += 1
            dangling_star = stream.accept(OP, "*")

        if self.module.rank > 1 and basis is None:
            raise ProblemParseError(start.line, start.column, "秩大於 1 時每個項都必須指定基底 e<k>")
        if sign < 0:
            coeff = -coeff
        return Term(coeff, tuple(mono), basis or 1)

    def _factor(self, stream: TokenStream, mono: List[int]) -> Optional[int]:
        """變數冪累加到 mono；遇到基底時回傳其索引"""
        token = stream.next()
        name = token.text
        if name in self.index:
            exponent = 1
            if stream.accept(OP, "^"):
                exponent = int(stream.expect(NUMBER, what="指數").text)
            mono[self.index[name]] += exponent
            return None
        match = ProblemParser.BASIS_PATTERN.match(name)
        if match:
            k = int(match.group(1))
            if not 1 <= k <= self.module.rank:
                raise ProblemParseError(token.line, token.column,
                                        f"基底索引 e{k} 超出秩 {self.module.rank}")
            return k
        if name == self.coeff_var:
            raise ProblemParseError(token.line, token.column,
                                    f"係數變數 {name} 必須寫在大括號內，例如 {{{name}}}*x")
        raise ProblemParseError(token.line, token.column, f"未宣告的變數 {name!r}")


def parse_problem(text: str) -> ProblemFile:
    return ProblemParser().parse_content(text)


def parse_element(text: str, module: FreeModule) -> FreeElem:
    """在給定的自由模中解析一個元素（允許零，用於 reduce --target）"""
    return ElementParser(module).parse_line(text, 1, allow_zero=True)


def parse_domain(text: str) -> CoeffDomain:
    """係數環字串（'ZZ'、'GF(5)[t]' …）→ CoeffDomain"""
    return ProblemParser()._parse_domain(text, 1, 1)
