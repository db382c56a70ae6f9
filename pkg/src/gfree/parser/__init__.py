"""
問題檔解析模組

提供問題檔的詞法分析、解析與 pretty printer。
"""

from .tokenizer import ProblemParseError, Token, tokenize_line
from .coefficient_parser import CoefficientParser, parse_coefficient
from .problem_parser import (
    ElementParser,
    ProblemFile,
    ProblemParser,
    parse_domain,
    parse_element,
    parse_problem,
)
from .printer import format_problem

__all__ = [
    "ProblemParseError",
    "Token",
    "tokenize_line",
    "CoefficientParser",
    "parse_coefficient",
    "ElementParser",
    "ProblemFile",
    "ProblemParser",
    "parse_domain",
    "parse_element",
    "parse_problem",
    "format_problem",
]
