"""
報告渲染器測試
"""

import pytest
import sys
from pathlib import Path

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.renderer import ReportErrorHandler, ReportRenderer, collect_records, render_report


RECORDS = [
    ("witness.value", "3"),
    ("witness.unit", "false"),
    ("check.groebner", "true"),
    ("check.fibers", "false"),
    ("check.degeneration.ranks", "skipped"),
]


class TestMachineFormat:
    """machine 格式測試"""

    def test_key_value_lines(self):
        """測試每行一筆 key = value"""
        text = render_report(RECORDS[:2], "machine")
        assert text == "witness.value = 3\nwitness.unit = false\n"

    def test_escape(self):
        """測試換行與反斜線轉義"""
        text = render_report([("det.failure.1", "第一行\n第二行\\")], "machine")
        assert text == "det.failure.1 = 第一行\\n第二行\\\\\n"

    def test_deterministic(self):
        """測試相同輸入得到相同輸出"""
        assert render_report(RECORDS, "machine") == render_report(list(RECORDS), "machine")

    def test_invalid_format(self):
        """測試不支援的格式"""
        with pytest.raises(ValueError):
            render_report(RECORDS, "json")


class TestTextFormat:
    """text 格式測試"""

    def setup_method(self):
        self.renderer = ReportRenderer()

    def test_sections(self):
        """測試分段標題"""
        text = self.renderer.render(RECORDS, "text")
        assert "== Freeness witness ==" in text
        assert "  value: 3" in text
        assert "== 檢查 ==" in text

    def test_check_marks(self):
        """測試檢查結果的符號"""
        text = self.renderer.render(RECORDS, "text")
        assert "  ✓ groebner: true" in text
        assert "  ✗ fibers: false" in text
        assert "  · degeneration.ranks: skipped" in text

    def test_unknown_prefix(self):
        """測試沒有標題對照的前綴"""
        text = self.renderer.render([("custom.key", "1")], "text")
        assert "== custom ==" in text


class TestCollectRecords:
    """記錄收集測試"""

    def test_object_with_records(self):
        """測試具有 records() 的物件"""

        class Report:
            def records(self):
                return [("gb.size", "2")]

        assert collect_records(Report()) == [("gb.size", "2")]

    def test_mixed_list(self):
        """測試物件與記錄混合"""

        class Report:
            def records(self):
                return [("gb.size", "2")]

        assert collect_records([Report(), ("info.version", "1")]) == [
            ("gb.size", "2"), ("info.version", "1")]


class TestReportErrorHandler:
    """檢查失敗收集測試"""

    def setup_method(self):
        self.handler = ReportErrorHandler()

    def test_collect_failed_checks(self):
        """測試只收集 false 的 check 鍵"""
        self.handler.collect(RECORDS)
        assert self.handler.failed_checks() == ["check.fibers"]
        assert self.handler.has_errors()

    def test_no_failures(self):
        """測試全部通過"""
        self.handler.collect([("check.groebner", "true"), ("witness.unit", "false")])
        assert not self.handler.has_errors()

    def test_handle_exception(self):
        """測試記錄例外"""
        assert self.handler.handle(ValueError("壞掉了"), "fibers") == "壞掉了"
        errors = self.handler.errors
        assert errors[0]['type'] == 'ValueError'
        assert errors[0]['context'] == 'fibers'
        assert self.handler.failed_checks() == []

    def test_handle_empty_message(self):
        """測試沒有訊息的例外以類別名稱代替"""
        assert self.handler.handle(KeyError(), "gb") == "KeyError"
        assert self.handler.has_errors()
