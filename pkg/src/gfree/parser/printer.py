"""
問題檔的 pretty printer

輸出可再被 ProblemParser 解析的正規文字：parse → format → parse 得到相同的語意。
"""

from typing import List

from ..poly import format_element
from .problem_parser import ProblemFile


def format_problem(problem: ProblemFile) -> str:
    """
    Example:
        >>> print(format_problem(parse_problem("ring ZZ\\nvars x y\\ngens:\\n2*x+y")))
        ring ZZ
        vars x y
        order lex
        gens:
        2*x + y
    """
    lines: List[str] = [f"ring {problem.domain}", "vars " + " ".join(problem.variables)]

    order = problem.order
    order_line = f"order {order.base.value}"
    if order.permutation is not None:
        order_line += " " + " ".join(problem.variables[i] for i in order.permutation)
    lines.append(order_line)
    if order.weights is not None:
        lines.append("weights " + " ".join(map(str, order.weights)))
    if problem.grading is not None:
        lines.append("grading " + " ".join(map(str, problem.grading.var_weights)))
    if problem.rank > 1 or problem.shifts:
        lines.append(" ".join(["module", str(problem.rank), *map(str, problem.shifts)]))

    lines.append("gens:")
    lines.extend(format_element(g) for g in problem.gens)
    return "\n".join(lines) + "\n"
