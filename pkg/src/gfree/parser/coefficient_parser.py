"""
係數字面值的解析

整數、有理數 p/q，以及 k[t] 中以大括號包住的單變數多項式。
"""

from fractions import Fraction
from typing import Dict, List

from ..coeff import CoeffDomain, CoeffError, RingElem, UnivariatePolyDomain
from .tokenizer import EOL, IDENT, NUMBER, OP, ProblemParseError, TokenStream, tokenize_line


class CoefficientParser:
    """解析單一係數環 A 的字面值"""

    def __init__(self, domain: CoeffDomain):
        self.domain = domain
        self.coeff_var = getattr(domain, "var", None)

    def parse(self, text: str, line: int = 1) -> RingElem:
        """
        解析帶正負號的係數；k[t] 的字面值可省略大括號

        Raises:
            ProblemParseError: 語法錯誤或零係數

        Example:
            >>> CoefficientParser(QQ).parse("-1/2")
            RingElem(QQ, -1/2)
        """
        text = str(text).strip()
        if isinstance(self.domain, UnivariatePolyDomain) and "{" not in text:
            text = "{" + text + "}"
        stream = TokenStream(tokenize_line(text, line))
        sign = self._signs(stream)
        coeff = self._coefficient(stream)
        if not stream.at(EOL):
            raise stream.error("係數之後不應還有其他內容")
        return -coeff if sign < 0 else coeff

    @staticmethod
    def _signs(stream: TokenStream) -> int:
        sign = 1
        while stream.at(OP, "+") or stream.at(OP, "-"):
            if stream.next().text == "-":
                sign = -sign
        return sign

    @staticmethod
    def _number(stream: TokenStream) -> Fraction:
        token = stream.expect(NUMBER, what="數字")
        value = Fraction(int(token.text))
        if stream.accept(OP, "/"):
            den = stream.expect(NUMBER, what="分母")
            if int(den.text) == 0:
                raise ProblemParseError(den.line, den.column, "分母不可為零")
            value /= int(den.text)
        return value

    def _coefficient(self, stream: TokenStream):
        token = stream.peek()
        if token.kind == OP:
            value = self._braced(stream)
        else:
            number = self._number(stream)
            value = int(number) if number.denominator == 1 else number
        try:
            coeff = self.domain(value)
        except CoeffError as e:
            raise ProblemParseError(token.line, token.column, str(e))
        if coeff.is_zero:
            raise ProblemParseError(token.line, token.column, "係數字面值不可為零")
        return coeff

    def _braced(self, stream: TokenStream) -> List[Fraction]:
        """'{' k[t] 中的多項式 '}' → 降冪係數列表"""
        open_brace = stream.expect(OP, "{")
        if not isinstance(self.domain, UnivariatePolyDomain):
            raise ProblemParseError(open_brace.line, open_brace.column,
                                    f"{self.domain} 的係數不能使用大括號")
        powers: Dict[int, Fraction] = {}
        first = True
        while first or stream.at(OP, "+") or stream.at(OP, "-"):
            sign = self._signs(stream)
            c, e = Fraction(1), 0
            has_number = stream.at(NUMBER)
            if has_number:
                c = self._number(stream)
                stream.accept(OP, "*")
            if stream.at(IDENT):
                token = stream.next()
                if token.text != self.coeff_var:
                    raise ProblemParseError(token.line, token.column,
                                            f"大括號內只能使用係數變數 {self.coeff_var}")
                e = 1
                if stream.accept(OP, "^"):
                    e = int(stream.expect(NUMBER, what="指數").text)
            elif not has_number:
                raise stream.error(f"預期數字或 {self.coeff_var}")
            powers[e] = powers.get(e, Fraction(0)) + sign * c
            first = False
        stream.expect(OP, "}")
        degree = max(powers)
        return [powers.get(d, Fraction(0)) for d in range(degree, -1, -1)]


def parse_coefficient(text: str, domain: CoeffDomain) -> RingElem:
    return CoefficientParser(domain).parse(text)
