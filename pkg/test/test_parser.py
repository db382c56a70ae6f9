"""
問題檔解析器測試
"""

import pytest
import sys
from fractions import Fraction
from pathlib import Path

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.coeff import PrimeFieldDomain, RationalDomain, UnivariatePolyDomain
from gfree.parser import (
    ProblemParseError,
    ProblemParser,
    format_problem,
    parse_coefficient,
    parse_domain,
    parse_element,
    parse_problem,
    tokenize_line,
)
from gfree.poly import BaseOrder, FreeModule


SAMPLES = Path(__file__).parent / 'sample_inputs'
QQ = RationalDomain()


def problem(*lines):
    return parse_problem("\n".join(lines))


class TestTokenizer:
    """詞法分析測試"""

    def test_tokens(self):
        """測試切分與欄位"""
        tokens = tokenize_line("2*x^3 + y")
        assert [t.text for t in tokens] == ['2', '*', 'x', '^', '3', '+', 'y', '']
        assert tokens[2].column == 3
        assert tokens[-1].kind == "EOL"

    def test_unknown_character(self):
        """測試無法辨識的字元"""
        with pytest.raises(ProblemParseError) as info:
            tokenize_line("x $ y", 4)
        assert info.value.line == 4
        assert info.value.column == 3

    def test_error_message(self):
        """測試錯誤訊息格式"""
        assert str(ProblemParseError(2, 5, "錯誤")) == "第 2 行第 5 欄: 錯誤"
        assert str(ProblemParseError(2, 0, "錯誤")) == "第 2 行: 錯誤"


class TestDomains:
    """係數環宣告"""

    @pytest.mark.parametrize("text", ["ZZ", "QQ", "GF(5)", "QQ[t]", "GF(3)[s]"])
    def test_known(self, text):
        """測試可解析的係數環並原樣輸出"""
        assert str(parse_domain(text)) == text

    def test_integer_polynomials(self):
        """測試 ZZ[t] 被拒絕"""
        with pytest.raises(ProblemParseError, match="不是 Euclidean"):
            parse_domain("ZZ[t]")

    def test_non_prime(self):
        """測試 GF(4)"""
        with pytest.raises(ProblemParseError, match="不是質數"):
            parse_domain("GF(4)")

    def test_unknown(self):
        """測試未知的係數環"""
        with pytest.raises(ProblemParseError):
            parse_domain("RR")


class TestCoefficients:
    """係數字面值"""

    def test_rational(self):
        """測試有理數"""
        assert parse_coefficient("-1/2", QQ) == QQ(Fraction(-1, 2))

    def test_braced_polynomial(self):
        """測試大括號多項式"""
        Qt = UnivariatePolyDomain(QQ)
        assert parse_coefficient("{t^2 - 1}", Qt) == Qt([1, 0, -1])
        assert parse_coefficient("2*t + 1/2", Qt) == Qt([2, Fraction(1, 2)])

    def test_prime_field(self):
        """測試有限體中的分數"""
        F5 = PrimeFieldDomain(5)
        assert parse_coefficient("1/2", F5) == 3

    def test_zero(self):
        """測試零係數"""
        with pytest.raises(ProblemParseError, match="不可為零"):
            parse_coefficient("0", QQ)

    def test_braces_outside_poly_ring(self):
        """測試非 k[t] 不可用大括號"""
        with pytest.raises(ProblemParseError):
            parse_coefficient("{1}", QQ)


class TestProblemParser:
    """問題檔解析"""

    def test_sample_file(self):
        """測試解析範例檔"""
        parsed = ProblemParser().parse(str(SAMPLES / 'witness_zz.txt'))
        assert str(parsed.domain) == "ZZ"
        assert parsed.variables == ("x", "y")
        assert parsed.order.base == BaseOrder.LEX
        assert [str(g) for g in parsed.gens] == ["2*x + y", "3*x"]

    def test_poly_coefficients(self):
        """測試 𝔽_3[t] 範例檔"""
        parsed = ProblemParser().parse(str(SAMPLES / 'frobenius_gf3t.txt'))
        assert str(parsed.domain) == "GF(3)[t]"
        assert str(parsed.gens[0]) == "{t}*x + y"

    def test_module(self):
        """測試秩 2 與基底平移"""
        parsed = ProblemParser().parse(str(SAMPLES / 'module_rank2.txt'))
        assert parsed.rank == 2
        assert parsed.shifts == (0, 1)
        assert [str(g) for g in parsed.gens] == ["x*e1 - y^2*e2", "y*e1 + 1/2*x*e2"]
        assert parsed.effective_grading().basis_shifts == (0, 1)

    def test_missing_file(self):
        """測試檔案不存在"""
        with pytest.raises(FileNotFoundError):
            ProblemParser().parse(str(SAMPLES / 'missing.txt'))

    def test_zero_generator(self):
        """測試生成元為零時回報行號"""
        with pytest.raises(ProblemParseError, match="生成元為零") as info:
            ProblemParser().parse(str(SAMPLES / 'zero_generator.txt'))
        assert info.value.line == 5

    def test_order_permutation_and_weights(self):
        """測試排列與權重"""
        parsed = problem("ring QQ", "vars x y z", "order grevlex z x y", "weights 1 2 3",
                         "grading 1 1 2", "gens:", "x*y + z")
        assert parsed.order.permutation == (2, 0, 1)
        assert parsed.order.weights == (1, 2, 3)
        assert parsed.grading.var_weights == (1, 1, 2)

    def test_default_order(self):
        """測試省略 order 時為 lex"""
        parsed = problem("ring QQ", "vars x", "gens:", "x")
        assert parsed.order.base == BaseOrder.LEX

    def test_comments_and_blank_lines(self):
        """測試註解與空行"""
        parsed = problem("# 註解", "ring QQ", "", "vars x y", "gens: x + y", "x - y")
        assert len(parsed.gens) == 2

    def test_unknown_variable(self):
        """測試未宣告的變數"""
        with pytest.raises(ProblemParseError, match="未宣告的變數") as info:
            problem("ring QQ", "vars x y", "gens:", "x + z")
        assert info.value.line == 4
        assert info.value.column == 5

    def test_unbraced_coefficient_variable(self):
        """測試係數變數沒有大括號"""
        with pytest.raises(ProblemParseError, match="必須寫在大括號內"):
            problem("ring QQ[t]", "vars x", "gens:", "t*x")

    def test_duplicate_stanza(self):
        """測試重複的宣告"""
        with pytest.raises(ProblemParseError, match="重複的宣告"):
            problem("ring QQ", "vars x", "vars y", "gens:", "x")

    def test_reserved_name(self):
        """測試保留字"""
        with pytest.raises(ProblemParseError, match="是保留字"):
            problem("ring QQ", "vars x e1", "gens:", "x")

    def test_missing_basis(self):
        """測試秩大於 1 時缺少基底"""
        with pytest.raises(ProblemParseError, match="必須指定基底"):
            problem("ring QQ", "vars x", "module 2", "gens:", "x*e1 + x")

    def test_basis_out_of_range(self):
        """測試基底超出秩"""
        with pytest.raises(ProblemParseError, match="超出秩"):
            problem("ring QQ", "vars x", "module 2", "gens:", "x*e3")

    def test_missing_gens(self):
        """測試缺少 gens 區段"""
        with pytest.raises(ProblemParseError):
            problem("ring QQ", "vars x")

    def test_first_line_must_be_ring(self):
        """測試第一行"""
        with pytest.raises(ProblemParseError) as info:
            problem("vars x", "ring QQ", "gens:", "x")
        assert info.value.line == 1


class TestElement:
    """單一元素解析"""

    def test_parse_element(self):
        """測試在給定自由模中解析"""
        R = FreeModule(QQ, ("x", "y"))
        assert str(parse_element("2x^2 - 1/3*y", R)) == "2*x^2 - 1/3*y"

    def test_zero_allowed(self):
        """測試 reduce 目標可以為零"""
        R = FreeModule(QQ, ("x", "y"))
        assert parse_element("0", R).is_zero

    def test_like_terms_merge(self):
        """測試同類項合併"""
        R = FreeModule(QQ, ("x", "y"))
        assert str(parse_element("x + y + x", R)) == "2*x + y"

    def test_negative_constant_in_poly_ring(self):
        """測試 k[t] 的負常數係數以減號輸出"""
        R = FreeModule(UnivariatePolyDomain(QQ), ("x", "y"))
        w = parse_element("{1 - t}*x - 1/2*y", R)
        assert str(w) == "{-t + 1}*x - 1/2*y"
        assert parse_element(str(w), R) == w
        assert str(parse_element("-3", R)) == "-3"


class TestFormatProblem:
    """pretty printer"""

    def test_format(self):
        """測試正規輸出"""
        parsed = ProblemParser().parse(str(SAMPLES / 'witness_zz.txt'))
        assert format_problem(parsed) == "ring ZZ\nvars x y\norder lex\ngens:\n2*x + y\n3*x\n"

    @pytest.mark.parametrize("name", ["witness_zz.txt", "field_qq.txt",
                                      "frobenius_gf3t.txt", "module_rank2.txt"])
    def test_reparse(self, name):
        """測試輸出可再解析為相同問題"""
        parsed = ProblemParser().parse(str(SAMPLES / name))
        again = parse_problem(format_problem(parsed))
        assert again.semantic() == parsed.semantic()
