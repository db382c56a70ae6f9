"""
Frobenius 冪與初始模的交換性檢查

特徵 p 時 (Σ c·m)^q = Σ c^q·m^q（q = p^e），因此生成元的 Frobenius 冪只需逐項取 q 次方。
反轉 witness 之後，M^[q] 的初始模應等於 in(M)^[q]。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..coeff import LocalizedDomain
from ..freeness import Witness, witness as extract_witness
from ..gb import DEFAULT_FUEL, GroebnerBasis, UncertifiedBasisError, buchberger, term_in_module
from ..poly import FreeElem, FreeModule, Term, mono_pow

logger = logging.getLogger(__name__)


class CharpError(Exception):
    """特徵 p 檢查錯誤"""
    pass


class CharacteristicError(CharpError):
    """係數環的特徵不是正質數"""
    pass


def _characteristic(gens: Sequence[FreeElem], domain=None) -> int:
    domain = domain or (gens[0].domain if gens else None)
    p = domain.characteristic if domain is not None else 0
    if p <= 0:
        raise CharacteristicError(f"Frobenius 冪需要正特徵的係數環，收到 {domain}")
    return p


def frobenius_term(term: Term, q: int) -> Term:
    return Term(term.coeff ** q, mono_pow(term.mono, q), term.basis)


def frobenius_power(gens: Sequence[FreeElem], e: int) -> List[FreeElem]:
    """
    生成元的 p^e 次 Frobenius 冪（逐項取 q 次方）

    Raises:
        CharacteristicError: 特徵為 0
        CharpError: e 為負，或冪的首項不是首項的冪
    """
    if e < 0:
        raise CharpError(f"e 必須非負，收到 {e}")
    if not gens:
        return []
    p = _characteristic(gens)
    q = p ** e
    powers = []
    for w in gens:
        power = FreeElem(w.module, (frobenius_term(t, q) for t in w.terms))
        if w and power.leading_term() != frobenius_term(w.leading_term(), q):
            raise CharpError(f"{w} 的 Frobenius 冪首項不是首項的冪")
        powers.append(power)
    return powers


@dataclass
class FrobeniusReport:
    p: int
    e: int
    initial_of_power: List[Term]
    power_of_initial: List[Term]
    equal_after_localization: bool
    witness_used: Witness
    equal_raw: bool
    module: Optional[FreeModule] = None

    def records(self) -> List[Tuple[str, str]]:
        rows = [("frobenius.p", str(self.p)),
                ("frobenius.e", str(self.e)),
                ("frobenius.q", str(self.p ** self.e)),
                ("frobenius.witness", str(self.witness_used.value))]
        rows.extend((f"frobenius.initial_of_power.{i}", self._term_text(t))
                    for i, t in enumerate(self.initial_of_power, 1))
        rows.extend((f"frobenius.power_of_initial.{i}", self._term_text(t))
                    for i, t in enumerate(self.power_of_initial, 1))
        rows.append(("frobenius.equal_raw", str(self.equal_raw).lower()))
        rows.append(("check.frobenius.equal", str(self.equal_after_localization).lower()))
        return rows

    def _term_text(self, t: Term) -> str:
        if self.module is not None:
            return str(FreeElem(self.module, [t]))
        return f"{t.coeff} * {t.mono} * e{t.basis}"


def _localize(terms: Sequence[Term], domain: LocalizedDomain) -> List[Term]:
    return [Term(domain.localize(t.coeff), t.mono, t.basis) for t in terms]


def same_term_module(left: Sequence[Term], right: Sequence[Term]) -> bool:
    """兩組項生成相同子模（互相包含）"""
    return (all(term_in_module(t, right) for t in left)
            and all(term_in_module(t, left) for t in right))


def frobenius_initial_check(G: GroebnerBasis, e: int,
                            fuel: int = DEFAULT_FUEL) -> FrobeniusReport:
    """
    比較 in(M^[q]) 與 in(M)^[q]（反轉 witness 後）

    Args:
        G: 已認證的 Gröbner 基（正特徵）
        e: q = p^e

    Raises:
        UncertifiedBasisError: G 未認證
        CharacteristicError: 特徵為 0
        FuelExhaustedError: 內部 Buchberger 超過 fuel
    """
    if not G.certified:
        raise UncertifiedBasisError("frobenius_initial_check 需要已認證的 Gröbner 基")
    p = _characteristic(G.gens, G.module.domain)
    w = extract_witness(G)
    powers = frobenius_power(G.gens, e)
    H = buchberger(powers, module=G.module, fuel=fuel)
    initial_of_power = list(H.initial_terms)
    q = p ** e
    power_of_initial = [frobenius_term(t, q) for t in G.initial_terms]

    local = LocalizedDomain(G.module.domain, w.value)
    equal = same_term_module(_localize(initial_of_power, local),
                             _localize(power_of_initial, local))
    equal_raw = same_term_module(initial_of_power, power_of_initial)
    if not equal:
        logger.warning("反轉 witness %s 後 in(M^[%d]) 與 in(M)^[%d] 不相等", w.value, q, q)
    return FrobeniusReport(p, e, initial_of_power, power_of_initial, equal, w, equal_raw,
                           G.module)
