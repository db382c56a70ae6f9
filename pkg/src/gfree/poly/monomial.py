"""
單項式（稠密指數向量）工具函數
"""

from typing import Iterator, Sequence, Tuple

Monomial = Tuple[int, ...]


def mono_one(nvars: int) -> Monomial:
    return (0,) * nvars


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b，假設 b | a"""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """a | b"""
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_pow(a: Monomial, n: int) -> Monomial:
    return tuple(x * n for x in a)


def mono_degree(a: Monomial, weights: Sequence[int] = None) -> int:
    if weights is None:
        return sum(a)
    return sum(w * x for w, x in zip(weights, a))


def is_squarefree(a: Monomial) -> bool:
    return all(x <= 1 for x in a)


def monomials_of_degree(weights: Sequence[int], degree: int) -> Iterator[Monomial]:
    """
    列舉加權次數恰為 degree 的所有單項式（weights 皆為正）

    依第一個變數指數由大到小遞迴產生。
    """
    nvars = len(weights)
    if nvars == 0:
        if degree == 0:
            yield ()
        return
    if degree < 0:
        return
    head, rest = weights[0], weights[1:]
    for e in range(degree // head, -1, -1):
        for tail in monomials_of_degree(rest, degree - e * head):
            yield (e,) + tail


def format_monomial(mono: Monomial, variables: Sequence[str]) -> str:
    """x^2*y；常數單項式回傳空字串"""
    factors = []
    for name, e in zip(variables, mono):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)
