"""
係數環上的 gcd 類運算

ext_gcd / lcm / strip_witness 與 Bézout 連鎖（多個係數的 gcd 組合）。
"""

from typing import List, Sequence, Tuple

from .domain import CoeffError, DomainMismatchError, RingElem


def _same_domain(x: RingElem, y: RingElem) -> None:
    if x.domain != y.domain:
        raise DomainMismatchError(f"係數環不一致: {x.domain} 與 {y.domain}")


def ext_gcd(x: RingElem, y: RingElem) -> Tuple[RingElem, RingElem, RingElem]:
    """
    擴展 gcd

    Args:
        x, y: 同一係數環的元素，不可同時為零

    Returns:
        tuple: (g, u, v)，g = u·x + v·y，g 已單位正規化

    Raises:
        DomainMismatchError: 係數環不一致
        CoeffError: 兩者皆為零
    """
    _same_domain(x, y)
    if x.is_zero and y.is_zero:
        raise CoeffError("ext_gcd 的兩個輸入不可同時為零")
    domain = x.domain
    g, u, v = domain._ext_gcd(x.payload, y.payload)
    return RingElem(domain, g), RingElem(domain, u), RingElem(domain, v)


def gcd(x: RingElem, y: RingElem) -> RingElem:
    return ext_gcd(x, y)[0]


def lcm(x: RingElem, y: RingElem) -> RingElem:
    """
    單位正規化的最小公倍數，(x) ∩ (y) = (lcm)

    Raises:
        CoeffError: 任一輸入為零
    """
    _same_domain(x, y)
    if x.is_zero or y.is_zero:
        raise CoeffError("lcm 的輸入不可為零")
    return (x * y).exquo(gcd(x, y)).normalized()


def lcm_many(values: Sequence[RingElem], domain=None) -> RingElem:
    """多個非零元素的 lcm；空序列回傳 1"""
    if not values:
        if domain is None:
            raise CoeffError("空序列需指定 domain")
        return domain.one()
    result = values[0].normalized()
    for value in values[1:]:
        result = lcm(result, value)
    return result


def bezout_cascade(coeffs: Sequence[RingElem]) -> Tuple[RingElem, List[RingElem]]:
    """
    依序迭代 ext_gcd，求 g = gcd(c_1, …, c_s) 與 u_j 使 g = Σ u_j c_j

    索引順序固定，因此結果是確定性的（化簡時用於選擇 reducer）。
    """
    if not coeffs:
        raise CoeffError("bezout_cascade 需要至少一個係數")
    first = coeffs[0]
    unit = first.unit_normal()
    g = first * unit
    multipliers = [unit]
    for c in coeffs[1:]:
        if c.is_zero:
            multipliers.append(c.domain.zero())
            continue
        if g.is_zero:
            unit = c.unit_normal()
            g = c * unit
            multipliers = [m * 0 for m in multipliers] + [unit]
            continue
        g, s, t = ext_gcd(g, c)
        multipliers = [m * s for m in multipliers] + [t]
    return g, multipliers


def strip_witness_parts(x: RingElem, a: RingElem) -> Tuple[RingElem, RingElem, int]:
    """
    反覆除去 gcd(x, a)：x = core · d，d | a^k

    Returns:
        tuple: (core, d, k)
    """
    _same_domain(x, a)
    one = x.domain.one()
    if x.is_zero:
        return x, one, 0
    if a.is_zero:
        raise CoeffError("witness 不可為零")
    core, d, k = x, one, 0
    while True:
        g = gcd(core, a)
        if g.is_unit:
            return core, d, k
        core = core.exquo(g)
        d = d * g
        k += 1


def strip_witness(x: RingElem, a: RingElem) -> Tuple[RingElem, int]:
    """
    除去 x 中整除 a 某次冪的部分

    Returns:
        tuple: (core, k)，gcd(core, a^∞) 為單位，除去的部分整除 a^k；x = 0 時為 (0, 0)
    """
    core, _, k = strip_witness_parts(x, a)
    return core, k
