"""
精確有理數線性規劃

解 min c·x，限制 A x ≥ b、x ≥ 0。單純形法交由 sympy.solvers.simplex.linprog
（全程有理數），此處只負責轉換成 A x ≤ b 的形式與例外對應。
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from sympy import Rational
from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

logger = logging.getLogger(__name__)


class DegenerationError(Exception):
    """退化（degeneration）計算錯誤"""
    pass


class InfeasibleError(DegenerationError):
    """線性規劃無可行解"""
    pass


class UnboundedError(DegenerationError):
    """線性規劃目標無界"""
    pass


def _rational(v) -> Rational:
    v = Fraction(v)
    return Rational(v.numerator, v.denominator)


def solve_lp(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
             c: Sequence[Fraction]) -> List[Fraction]:
    """
    min c·x，A x ≥ b，x ≥ 0

    Returns:
        list: 最佳解 x

    Raises:
        InfeasibleError: 無可行解
        UnboundedError: 目標無界
    """
    m, n = len(A), len(c)
    if m == 0:
        if any(Fraction(cj) < 0 for cj in c):
            raise UnboundedError("線性規劃目標無界")
        return [Fraction(0)] * n

    cost = [_rational(cj) for cj in c]
    upper = [[-_rational(v) for v in row] for row in A]
    rhs = [-_rational(v) for v in b]
    try:
        _, point = linprog(cost, upper, rhs)
    except InfeasibleLPError as e:
        raise InfeasibleError(f"線性規劃無可行解：{e}")
    except UnboundedLPError as e:
        raise UnboundedError(f"線性規劃目標無界：{e}")

    solution = [Fraction(int(Rational(v).p), int(Rational(v).q)) for v in point]
    logger.debug("線性規劃完成：%d 條限制、%d 個變數", m, n)
    return solution
