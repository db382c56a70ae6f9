"""
Gröbner 基測試
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
import sympy
from sympy import GF, Matrix
from sympy.matrices.normalforms import hermite_normal_form
from sympy.polys.matrices import DomainMatrix

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.coeff import IntegerDomain, PrimeFieldDomain, RationalDomain, UnivariatePolyDomain
from gfree.gb import (
    FuelExhaustedError,
    GroebnerBasis,
    GroebnerError,
    UncertifiedBasisError,
    buchberger,
    certify,
    check_groebner,
    initial_module,
    is_groebner,
    reduce,
    term_in_module,
    term_syzygies,
)
from gfree.poly import BaseOrder, FreeModule, Grading, OrderSpec, monomials_of_degree


ZZ = IntegerDomain()
QQ = RationalDomain()
F5 = PrimeFieldDomain(5)
F2t = UnivariatePolyDomain(PrimeFieldDomain(2))

VARIABLES = ("x", "y", "z")

RANDOM_COEFFS = {
    "ZZ": (ZZ, lambda rng: rng.randint(-4, 4)),
    "GF(5)": (F5, lambda rng: rng.randint(0, 4)),
    "GF(2)[t]": (F2t, lambda rng: [rng.randint(0, 1) for _ in range(rng.randint(1, 3))]),
}


def ring(domain, variables=("x", "y"), order=None):
    R = FreeModule(domain, variables, 1, order or OrderSpec(BaseOrder.LEX))
    return R, [R.variable(v) for v in variables]


def from_sympy(poly, R):
    """sympy.Poly → FreeElem（QQ 係數）"""
    return R.from_dict({(monom, 1): Fraction(int(c.p), int(c.q)) for monom, c in poly.terms()})


def random_monomial(rng, nvars, degree):
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def random_element(rng, R, coeff, max_degree=3, max_terms=3):
    """次數 ≤ max_degree、至多 max_terms 項的隨機元素（可能為零）"""
    mapping = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = random_monomial(rng, R.nvars, rng.randint(0, max_degree))
        mapping[(mono, rng.randint(1, R.rank))] = coeff(rng)
    return R.from_dict(mapping)


def random_homogeneous(rng, R, coeff, degree, max_terms=3):
    """標準分次下次數恰為 degree 的隨機元素"""
    support = list(Grading.standard(R.nvars, R.rank).basis_monomials(R.rank, degree))
    picked = rng.sample(support, min(len(support), rng.randint(1, max_terms)))
    return R.from_dict({key: coeff(rng) for key in picked})


def combination(rng, gens, coeff):
    """Σ h_i·g_i，h_i 為隨機多項式"""
    R = gens[0].module
    total = R.zero()
    for g in gens:
        total = total + g.mul_poly(random_element(rng, R.ring(), coeff, max_degree=2))
    return total


class TestBuchbergerOverIntegers:
    """ℤ 係數的 Gröbner 基"""

    def setup_method(self):
        self.R, (self.x, self.y) = ring(ZZ)
        self.gens = [self.x.scale(2) + self.y, self.x.scale(3)]

    def test_basis(self):
        """測試 (2x+y, 3x) 的 Gröbner 基為 {x − y, 3y}"""
        G = buchberger(self.gens)
        assert [str(g) for g in G.gens] == ["x - y", "3*y"]
        assert G.certified
        assert G.stats["additions"] == 1

    def test_input_is_not_groebner(self):
        """測試輸入本身不是 Gröbner 基"""
        result = check_groebner(self.gens)
        assert not result.ok
        assert result.pair == (0, 1)
        assert str(result.remainder) == "3*y"
        assert ("check.groebner", "false") in result.records()

    def test_generators_reduce_to_zero(self):
        """測試原生成元對 Gröbner 基化簡為零"""
        G = buchberger(self.gens)
        for g in self.gens:
            assert reduce(g, G, check=True).remainder.is_zero

    def test_other_variable_order(self):
        """測試 y > x 時的 Gröbner 基"""
        G = buchberger(self.gens, order=OrderSpec(BaseOrder.LEX, (1, 0)))
        assert [str(g) for g in G.gens] == ["y + 2*x", "3*x"]
        assert is_groebner(G)

    def test_fuel_exhausted(self):
        """測試 fuel 上限"""
        with pytest.raises(FuelExhaustedError) as info:
            buchberger(self.gens, fuel=1)
        assert info.value.fuel == 1

    def test_empty_generators(self):
        """測試空生成元列表"""
        G = buchberger([], module=self.R)
        assert len(G) == 0
        assert G.certified
        with pytest.raises(GroebnerError):
            buchberger([])

    def test_zero_generators_dropped(self):
        """測試零生成元被略去"""
        G = buchberger([self.R.zero(), self.x])
        assert [str(g) for g in G.gens] == ["x"]

    def test_unit_normalized(self):
        """測試首係數取正"""
        G = buchberger([-self.x - self.y])
        assert [str(g) for g in G.gens] == ["x + y"]

    def test_mixed_modules(self):
        """測試不同係數環的生成元"""
        other = FreeModule(QQ, ("x", "y")).variable("x")
        with pytest.raises(GroebnerError):
            buchberger([self.x, other])

    def test_pair_statistics(self):
        """測試 (2x+y, 3x) 的配對統計：(2x+y, 3y) 被鏈準則略過"""
        stats = buchberger(self.gens).stats
        assert stats["pairs"] == 2
        assert stats["pruned"] == 1
        assert stats["zero_reductions"] == 1
        assert stats["rounds"] == 1

    def test_displaced_generator(self):
        """測試首項被新首項整除的舊生成元被移除"""
        G = buchberger([self.x.scale(2) * self.x + self.y, self.x])
        assert [str(g) for g in G.gens] == ["x", "y"]
        assert G.stats["replaced"] == 1
        assert G.stats["pairs"] == 0

    def test_common_coefficient_keeps_pair(self):
        """測試首係數不互質時不套用互質準則"""
        G = buchberger([self.x.scale(2) + self.R.monomial(), self.y.scale(2)])
        assert [str(g) for g in G.gens] == ["2*x + 1", "y"]
        assert G.stats["pairs"] == 1

    def test_three_variables_grlex(self):
        """測試三變數 grlex 的 ℤ 係數例子可在有限配對內完成"""
        R = FreeModule(ZZ, ("x", "y", "z"), 1, OrderSpec(BaseOrder.GRLEX))
        gens = [
            R.from_dict({((0, 2, 1), 1): 2, ((1, 1, 0), 1): -3, ((0, 1, 1), 1): 2}),
            R.from_dict({((3, 0, 0), 1): -3, ((1, 0, 1), 1): 4, ((0, 1, 0), 1): 2}),
            R.from_dict({((0, 1, 2), 1): -1, ((2, 0, 0), 1): -1, ((1, 0, 1), 1): -5}),
            R.from_dict({((0, 1, 2), 1): -4, ((1, 1, 0), 1): -1, ((0, 0, 2), 1): -4}),
        ]
        G = buchberger(gens, fuel=20_000)
        assert is_groebner(G)
        assert G.stats["pruned"] > 0
        for g in gens:
            assert reduce(g, G, check=True).remainder.is_zero

    def test_records(self):
        """測試報告記錄"""
        records = dict(buchberger(self.gens).records())
        assert records["gb.ring"] == "ZZ"
        assert records["gb.size"] == "2"
        assert records["gb.initial.2"] == "3*y"


class TestReduction:
    """化簡測試"""

    def setup_method(self):
        self.R, (self.x, self.y) = ring(ZZ)

    def test_reduce_by_single(self):
        """測試 2x + y 對 x − y 化簡"""
        trace = reduce(self.x.scale(2) + self.y, [self.x - self.y])
        assert str(trace.remainder) == "3*y"
        assert [(i, str(q)) for i, q in trace.quotients] == [(0, "2")]
        assert trace.verify(self.x.scale(2) + self.y, [self.x - self.y])

    def test_bezout_combination(self):
        """測試以 Bézout 組合化簡：x ∈ (2x, 3x)"""
        gens = [self.x.scale(2), self.x.scale(3)]
        trace = reduce(self.x, gens, check=True)
        assert trace.remainder.is_zero
        assert trace.recombine(gens) == self.x

    def test_coefficient_not_in_ideal(self):
        """測試係數不在首係數理想中時移入餘式"""
        trace = reduce(self.x + self.y, [self.x.scale(2)])
        assert str(trace.remainder) == "x + y"
        assert trace.steps == 0

    def test_records(self):
        """測試化簡記錄"""
        records = dict(reduce(self.x.scale(2) + self.y, [self.x - self.y]).records())
        assert records["reduce.remainder"] == "3*y"
        assert records["reduce.zero"] == "false"
        assert records["reduce.quotient.1"] == "2"

    def test_module_mismatch(self):
        """測試不同序的元素"""
        other = self.x.reorder(self.R.with_order(OrderSpec(BaseOrder.GRLEX)))
        with pytest.raises(GroebnerError):
            reduce(other, [self.x])


class TestCertification:
    """Gröbner 基判定與初始模"""

    def setup_method(self):
        self.R, (self.x, self.y) = ring(ZZ)

    def test_certify(self):
        """測試現成的 Gröbner 基"""
        G = certify([self.x - self.y, self.y.scale(3)])
        assert G.certified
        assert [str(self.R.element([t])) for t in initial_module(G)] == ["x", "3*y"]

    def test_initial_module_requires_certified(self):
        """測試未認證的基"""
        candidate = GroebnerBasis.candidate([self.x.scale(2) + self.y, self.x.scale(3)])
        with pytest.raises(UncertifiedBasisError):
            initial_module(candidate)

    def test_term_in_module(self):
        """測試項是否落在項子模中"""
        initials = [self.x.scale(2).leading_term(), self.y.scale(3).leading_term()]
        assert term_in_module((self.x * self.y).leading_term(), initials)
        assert not term_in_module(self.x.leading_term(), initials)
        assert term_in_module(self.x.scale(4).leading_term(), initials)

    def test_term_syzygies(self):
        """測試項 syzygy"""
        leads = [self.x.scale(2).leading_term(), (self.x * self.y).scale(3).leading_term()]
        (syz,) = term_syzygies(leads)
        assert syz.left.coeff == 3 and syz.left.mono == (0, 1)
        assert syz.right.coeff == -2 and syz.right.mono == (0, 0)


class TestRankTwo:
    """秩 2 自由模"""

    def test_submodule(self):
        """測試子模的 Gröbner 基"""
        F = FreeModule(QQ, ("x", "y"), 2)
        a = F.from_dict({((1, 0), 1): 1, ((0, 1), 2): 1})
        b = F.from_dict({((0, 1), 1): 1, ((1, 0), 2): -1})
        G = buchberger([a, b])
        assert is_groebner(G)
        for g in (a, b):
            assert reduce(g, G).remainder.is_zero
        # y·a − x·b = (y² + x²)·e2
        assert reduce(F.from_dict({((0, 2), 2): 1, ((2, 0), 2): 1}), G).remainder.is_zero


class TestAgainstSympy:
    """ℚ 上與 sympy 的 reduced Gröbner 基比較"""

    @pytest.mark.parametrize("order,base", [("lex", BaseOrder.LEX),
                                            ("grlex", BaseOrder.GRLEX),
                                            ("grevlex", BaseOrder.GREVLEX)])
    def test_fixed_seed(self, order, base):
        """測試固定種子的隨機理想"""
        x, y = sympy.symbols("x y")
        R, _ = ring(QQ, order=OrderSpec(base))
        rng = random.Random(1234)
        for _ in range(8):
            exprs = []
            for _ in range(2):
                expr = sum(rng.randint(-3, 3) * x ** rng.randint(0, 2) * y ** rng.randint(0, 2)
                           for _ in range(3))
                if expr != 0:
                    exprs.append(expr)
            if not exprs:
                continue
            expected = sympy.groebner(exprs, x, y, order=order, domain=sympy.QQ)
            gens = [from_sympy(sympy.Poly(e, x, y, domain=sympy.QQ), R) for e in exprs]
            G = buchberger(gens)
            want = {from_sympy(p, R) for p in expected.polys if not p.is_zero}
            assert set(G.gens) == want

    def test_ideal_membership(self):
        """測試 ℤ 上的隨機生成元都化簡為零"""
        R, (x, y) = ring(ZZ, order=OrderSpec(BaseOrder.GREVLEX))
        rng = random.Random(99)
        for _ in range(6):
            gens = []
            for _ in range(2):
                terms = {((rng.randint(0, 2), rng.randint(0, 2)), 1): rng.randint(-6, 6)
                         for _ in range(2)}
                g = R.from_dict(terms)
                if g:
                    gens.append(g)
            if not gens:
                continue
            G = buchberger(gens)
            assert is_groebner(G)
            for g in gens:
                assert reduce(g, G, check=True).remainder.is_zero


class TestRandomSubmodules:
    """隨機子模：ℤ、𝔽_5、𝔽_2[t]，至多 3 變數、4 個生成元、次數 3、秩 2"""

    @pytest.mark.parametrize("name", list(RANDOM_COEFFS))
    def test_fixed_seed(self, name):
        """測試 500 個隨機子模的 Gröbner 基，前 200 個另加隨機組合"""
        domain, coeff = RANDOM_COEFFS[name]
        rng = random.Random(f"submodules-{name}")
        for case in range(500):
            nvars, rank = rng.randint(1, 3), rng.randint(1, 2)
            base = rng.choice([BaseOrder.GRLEX, BaseOrder.GREVLEX])
            R = FreeModule(domain, VARIABLES[:nvars], rank, OrderSpec(base))
            gens = [g for g in (random_element(rng, R, coeff) for _ in range(rng.randint(1, 4))) if g]
            if not gens:
                continue
            G = buchberger(gens)
            assert is_groebner(G), (case, [str(g) for g in gens])
            for g in gens:
                assert reduce(g, G, check=True).remainder.is_zero
            if case < 200:
                w = combination(rng, gens, coeff)
                assert reduce(w, G, check=True).remainder.is_zero, (case, str(w))


def _columns(gens, rank, degree):
    """次數 degree 部分 M_ν 的生成向量：m·g，座標依 (monomial, basis) 排列"""
    grading = Grading.standard(gens[0].module.nvars, rank)
    rows = list(grading.basis_monomials(rank, degree))
    columns = []
    for g in gens:
        d = grading.degree(*g.leading_term().key)
        for m in monomials_of_degree(grading.var_weights, degree - d):
            multiple = g.mul_term(1, m)
            columns.append([int(multiple.coefficient(mono, basis).payload) for mono, basis in rows])
    return rows, columns


def in_lattice(columns, v):
    """v 是否落在 columns 生成的 ℤ-格中（比較 Hermite 標準形）"""
    if not any(v):
        return True
    columns = [c for c in columns if any(c)]
    if not columns:
        return False
    A = Matrix(columns).T
    return hermite_normal_form(A) == hermite_normal_form(A.row_join(Matrix(v)))


def in_span_mod(columns, v, p):
    """v 是否落在 columns 在 𝔽_p 上張成的子空間中（比較秩）"""
    if not any(c % p for c in v):
        return True
    if not columns:
        return False
    A = Matrix(columns).T
    rank = DomainMatrix.from_Matrix(A).convert_to(GF(p)).rank()
    return rank == DomainMatrix.from_Matrix(A.row_join(Matrix(v))).convert_to(GF(p)).rank()


class TestMembershipOracle:
    """齊次子模的成員判定與線性代數結果一致（次數 ≤ 4）"""

    @pytest.mark.parametrize("name", ["ZZ", "GF(5)"])
    def test_fixed_seed(self, name):
        """測試化簡為零若且唯若向量落在 M_ν 中"""
        domain, coeff = RANDOM_COEFFS[name]
        oracle = in_lattice if name == "ZZ" else (lambda cols, v: in_span_mod(cols, v, 5))
        rng = random.Random(f"membership-{name}")
        members = outsiders = 0
        for case in range(60):
            nvars, rank = rng.randint(2, 3), rng.randint(1, 2)
            R = FreeModule(domain, VARIABLES[:nvars], rank, OrderSpec(BaseOrder.GREVLEX))
            gens = [random_homogeneous(rng, R, coeff, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if g]
            if not gens:
                continue
            G = buchberger(gens)
            for degree in range(5):
                rows, columns = _columns(gens, rank, degree)
                candidates = [random_homogeneous(rng, R, coeff, degree)]
                if columns:
                    picks = [rng.randint(-3, 3) for _ in columns]
                    v = [sum(k * col[i] for k, col in zip(picks, columns)) for i in range(len(rows))]
                    candidates.append(R.from_dict(dict(zip(rows, v))))
                for w in candidates:
                    v = [int(w.coefficient(mono, basis).payload) for mono, basis in rows]
                    expected = oracle(columns, v)
                    assert reduce(w, G).remainder.is_zero == expected, (case, degree, str(w))
                    members += expected
                    outsiders += not expected
        assert members > 0 and outsiders > 0
