"""
係數環運算測試
"""

import random
import sys
from fractions import Fraction
from math import gcd as int_gcd
from pathlib import Path

import pytest
import sympy

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.coeff import (
    CoeffError,
    DomainKind,
    DomainMismatchError,
    IntegerDomain,
    LocalizedDomain,
    PrimeFieldDomain,
    RationalDomain,
    UnivariatePolyDomain,
    bezout_cascade,
    ext_gcd,
    gcd,
    lcm,
    lcm_many,
    make_domain,
    strip_witness,
)


ZZ = IntegerDomain()
QQ = RationalDomain()


class TestIntegerDomain:
    """整數環測試"""

    def test_ext_gcd_identity(self):
        """測試擴展 gcd 的 Bézout 恆等式"""
        g, u, v = ext_gcd(ZZ(12), ZZ(18))
        assert g == 6
        assert u * 12 + v * 18 == g

    @pytest.mark.parametrize("a,b,expected", [(-4, 0, 4), (0, -9, 9), (-12, -18, 6), (7, -3, 1)])
    def test_ext_gcd_negative_inputs(self, a, b, expected):
        """測試負數輸入時 gcd 仍取正值"""
        g, u, v = ext_gcd(ZZ(a), ZZ(b))
        assert g == expected
        assert u * a + v * b == g

    def test_ext_gcd_both_zero(self):
        """測試兩個零輸入"""
        with pytest.raises(CoeffError):
            ext_gcd(ZZ(0), ZZ(0))

    def test_lcm_is_normalized(self):
        """測試 lcm 取正值"""
        assert lcm(ZZ(4), ZZ(6)) == 12
        assert lcm(ZZ(-4), ZZ(6)) == 12

    def test_lcm_zero(self):
        """測試 lcm 不接受零"""
        with pytest.raises(CoeffError, match="不可為零"):
            lcm(ZZ(0), ZZ(3))

    def test_lcm_many_empty(self):
        """測試空序列的 lcm 為 1"""
        assert lcm_many([], ZZ) == 1
        with pytest.raises(CoeffError):
            lcm_many([])

    def test_units(self):
        """測試單位判定"""
        assert ZZ(-1).is_unit
        assert not ZZ(2).is_unit
        assert not ZZ(0).is_unit

    def test_exquo(self):
        """測試精確除法"""
        assert ZZ(12).exquo(ZZ(4)) == 3
        assert ZZ(12).try_exquo(ZZ(5)) is None
        with pytest.raises(CoeffError):
            ZZ(12).exquo(ZZ(5))

    def test_rejects_fraction(self):
        """測試非整數分數"""
        with pytest.raises(CoeffError):
            ZZ(Fraction(1, 2))
        assert ZZ(Fraction(4, 2)) == 2

    def test_domain_mismatch(self):
        """測試不同係數環不可混用"""
        with pytest.raises(DomainMismatchError):
            ZZ(1) + QQ(1)

    def test_immutable(self):
        """測試元素不可變"""
        x = ZZ(3)
        with pytest.raises(AttributeError):
            x.payload = 4

    def test_fuzz_ext_gcd(self):
        """測試隨機整數的 gcd 與 Bézout 係數"""
        rng = random.Random(20240611)
        for _ in range(50):
            a, b = rng.randint(-500, 500), rng.randint(-500, 500)
            if a == 0 and b == 0:
                continue
            g, u, v = ext_gcd(ZZ(a), ZZ(b))
            assert g == int_gcd(a, b)
            assert u * a + v * b == g


class TestPrimeField:
    """有限體測試"""

    def setup_method(self):
        self.F5 = PrimeFieldDomain(5)

    def test_reduction(self):
        """測試整數取模"""
        assert self.F5(7) == 2
        assert self.F5(-1) == 4

    def test_fraction(self):
        """測試分數轉換"""
        assert self.F5(Fraction(1, 2)) == 3
        with pytest.raises(CoeffError, match="不可逆"):
            self.F5(Fraction(1, 5))

    def test_requires_prime(self):
        """測試 p 必須是質數"""
        with pytest.raises(CoeffError):
            PrimeFieldDomain(4)

    def test_every_nonzero_is_unit(self):
        """測試非零元素皆可逆"""
        assert all(self.F5(k).is_unit for k in range(1, 5))
        assert self.F5(3).unit_normal() * 3 == 1

    def test_characteristic(self):
        """測試特徵"""
        assert self.F5.characteristic == 5
        assert ZZ.characteristic == 0


class TestUnivariatePoly:
    """k[t] 測試"""

    def setup_method(self):
        self.Qt = UnivariatePolyDomain(QQ)
        self.F3t = UnivariatePolyDomain(PrimeFieldDomain(3))

    def test_format(self):
        """測試字面值輸出"""
        assert str(self.Qt([1, 0, -1])) == "t^2 - 1"
        assert str(self.Qt([Fraction(1, 2), 3])) == "1/2*t + 3"
        assert str(self.Qt([])) == "0"

    def test_gcd_is_monic(self):
        """測試 gcd 為 monic"""
        f = self.Qt([1, 0, -1])
        g = self.Qt([2, -2])
        assert gcd(f, g) == self.Qt([1, -1])

    def test_exquo(self):
        """測試整除"""
        f = self.Qt([1, 0, -1])
        assert f.exquo(self.Qt([1, -1])) == self.Qt([1, 1])
        assert f.try_exquo(self.Qt([1, 0, 0])) is None

    def test_units_are_constants(self):
        """測試單位為非零常數"""
        assert self.Qt(5).is_unit
        assert not self.Qt([1, 0]).is_unit

    def test_prime_field_arithmetic(self):
        """測試 𝔽_3[t] 的 Frobenius"""
        t_plus_one = self.F3t([1, 1])
        assert t_plus_one ** 3 == self.F3t([1, 0, 0, 1])

    def test_evaluate(self):
        """測試代入"""
        f = self.Qt([1, 0, -1])
        assert self.Qt.evaluate(f, 3) == QQ(8)

    def test_make_domain(self):
        """測試工廠函數"""
        assert str(make_domain(DomainKind.POLY_OVER_PRIME_FIELD, 3)) == "GF(3)[t]"
        assert str(make_domain(DomainKind.POLY_OVER_RATIONALS, var="s")) == "QQ[s]"
        assert make_domain(DomainKind.INTEGERS) == ZZ

    def test_rejects_integer_base(self):
        """測試 ZZ[t] 不是 Euclidean 環"""
        with pytest.raises(CoeffError):
            UnivariatePolyDomain(ZZ)

    def test_fuzz_gcd_against_sympy(self):
        """測試隨機多項式的 gcd 與 sympy 一致"""
        rng = random.Random(7)
        t = sympy.Symbol("t")
        for _ in range(20):
            a = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
            b = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))]
            f, h = self.Qt(a), self.Qt(b)
            if f.is_zero or h.is_zero:
                continue
            expected = sympy.Poly(a, t, domain=sympy.QQ).gcd(sympy.Poly(b, t, domain=sympy.QQ))
            g, u, v = ext_gcd(f, h)
            assert g == self.Qt(expected.monic())
            assert u * f + v * h == g


class TestStripAndCascade:
    """witness 剝除與 Bézout 連鎖測試"""

    def test_strip_witness(self):
        """測試除去 a 的因子"""
        assert strip_witness(ZZ(12), ZZ(6)) == (ZZ(1), 2)
        assert strip_witness(ZZ(10), ZZ(6)) == (ZZ(5), 1)
        assert strip_witness(ZZ(0), ZZ(6)) == (ZZ(0), 0)

    def test_bezout_cascade(self):
        """測試多個係數的 gcd 組合"""
        coeffs = [ZZ(6), ZZ(10), ZZ(15)]
        g, multipliers = bezout_cascade(coeffs)
        assert g == 1
        assert sum((u * c for u, c in zip(multipliers, coeffs)), ZZ(0)) == g

    def test_bezout_cascade_leading_zero(self):
        """測試前面係數為零"""
        coeffs = [ZZ(0), ZZ(-4), ZZ(6)]
        g, multipliers = bezout_cascade(coeffs)
        assert g == 2
        assert sum((u * c for u, c in zip(multipliers, coeffs)), ZZ(0)) == g


class TestLocalizedDomain:
    """局部化 A_a 測試"""

    def setup_method(self):
        self.Z3 = LocalizedDomain(ZZ, ZZ(3))

    def test_units(self):
        """測試 a 的冪成為單位"""
        assert self.Z3.localize(ZZ(9)).is_unit
        assert self.Z3.localize(ZZ(-3)).is_unit
        assert not self.Z3.localize(ZZ(6)).is_unit

    def test_division_by_witness(self):
        """測試除以 a"""
        one = self.Z3.localize(ZZ(1))
        three = self.Z3.localize(ZZ(3))
        assert one.exquo(three) * three == one

    def test_ext_gcd(self):
        """測試局部化後的 gcd"""
        x, y = self.Z3.localize(ZZ(6)), self.Z3.localize(ZZ(4))
        g, u, v = ext_gcd(x, y)
        assert g == self.Z3.localize(ZZ(2))
        assert u * x + v * y == g

    def test_core(self):
        """測試 core 除去 a 的因子"""
        assert self.Z3.core(self.Z3.localize(ZZ(18))) == 2

    def test_invalid_witness(self):
        """測試 witness 不可為零"""
        with pytest.raises(CoeffError):
            LocalizedDomain(ZZ, ZZ(0))

    def test_format(self):
        """測試輸出"""
        assert str(self.Z3) == "ZZ[1/3]"
        assert str(self.Z3.localize(ZZ(2))) == "2"

    @pytest.mark.parametrize("which", ["ZZ[1/6]", "GF(3)[t][1/t]"])
    def test_ring_axioms(self, which):
        """測試隨機元素 b/a^k 的環公理與單位的逆元"""
        if which == "ZZ[1/6]":
            base, a = ZZ, ZZ(6)
        else:
            base = UnivariatePolyDomain(PrimeFieldDomain(3))
            a = base([1, 0])
        D = LocalizedDomain(base, a)
        witness = D.localize(a)
        rng = random.Random(which)

        def element():
            if base is ZZ:
                numerator = ZZ(rng.randint(-40, 40))
            else:
                numerator = base([rng.randint(0, 2) for _ in range(rng.randint(1, 4))])
            return D.localize(numerator).exquo(witness ** rng.randint(0, 3))

        one, zero = D.one(), D.zero()
        units = 0
        for _ in range(100):
            x, y, z = element(), element(), element()
            assert x + y == y + x
            assert x * y == y * x
            assert (x + y) + z == x + (y + z)
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + zero == x and x * one == x
            assert x + (-x) == zero
            assert (x * y).is_zero == (x.is_zero or y.is_zero)
            if x.is_unit:
                units += 1
                assert x * one.exquo(x) == one
        assert witness.is_unit and units > 0
