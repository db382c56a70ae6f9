"""
問題檔的詞法分析

每一行獨立切成 token，並保留 (行, 欄) 位置供錯誤訊息使用。
"""

import re
from typing import List, NamedTuple


class ProblemParseError(Exception):
    """
    問題檔解析錯誤

    Attributes:
        line: 行號（1 起算）
        column: 欄號（1 起算，0 表示整行）
    """

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"第 {line} 行第 {column} 欄: {message}" if column
                         else f"第 {line} 行: {message}")


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


NUMBER = "NUMBER"
IDENT = "IDENT"
OP = "OP"
EOL = "EOL"

OPERATORS = set("+-*^/(){}[]:,")

# 數字、識別字或單一運算子，前置空白略過
TOKEN_PATTERN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\S))')


def tokenize_line(text: str, line: int = 1) -> List[Token]:
    """
    切分一行文字

    Raises:
        ProblemParseError: 出現不認識的字元

    Example:
        >>> [t.text for t in tokenize_line("2*x^3 + y")]
        ['2', '*', 'x', '^', '3', '+', 'y', '']
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = TOKEN_PATTERN.match(text, pos)
        if match is None:
            break
        if match.group("number") is not None:
            kind, group = NUMBER, "number"
        elif match.group("ident") is not None:
            kind, group = IDENT, "ident"
        else:
            kind, group = OP, "op"
            if match.group("op") not in OPERATORS:
                raise ProblemParseError(line, match.start(group) + 1,
                                        f"無法辨識的字元 {match.group('op')!r}")
        tokens.append(Token(kind, match.group(group), line, match.start(group) + 1))
        pos = match.end()
    tokens.append(Token(EOL, "", line, len(text.rstrip()) + 1))
    return tokens


class TokenStream:
    """單行 token 的游標"""

    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != EOL:
            self.pos += 1
        return token

    def at(self, kind: str, text: str = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def accept(self, kind: str, text: str = None) -> bool:
        if self.at(kind, text):
            self.next()
            return True
        return False

    def expect(self, kind: str, text: str = None, what: str = None) -> Token:
        token = self.peek()
        if not self.at(kind, text):
            wanted = what or (repr(text) if text else kind)
            found = repr(token.text) if token.kind != EOL else "行尾"
            raise ProblemParseError(token.line, token.column, f"預期 {wanted}，卻遇到 {found}")
        return self.next()

    def error(self, message: str) -> ProblemParseError:
        token = self.peek()
        return ProblemParseError(token.line, token.column, message)
