"""
工具函數測試
"""

import io
import pytest
import sys
from pathlib import Path

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.utils import BatchProcessor, FileUtils


class TestFileUtils:
    """檔案工具測試"""

    def test_read_text(self, tmp_path):
        """測試讀取檔案"""
        path = tmp_path / "problem.txt"
        path.write_text("ring QQ\n", encoding='utf-8')
        assert FileUtils.read_text(str(path)) == "ring QQ\n"

    def test_read_stdin(self, monkeypatch):
        """測試 '-' 讀取 stdin"""
        monkeypatch.setattr(sys, "stdin", io.StringIO("ring ZZ\n"))
        assert FileUtils.read_text("-") == "ring ZZ\n"

    def test_missing_file(self, tmp_path):
        """測試檔案不存在"""
        with pytest.raises(FileNotFoundError):
            FileUtils.read_text(str(tmp_path / "none.txt"))


class TestBatchProcessor:
    """批次處理器測試"""

    @pytest.mark.parametrize("workers", [1, 4])
    def test_results_in_input_order(self, workers):
        """測試結果依輸入順序聚合"""
        results = BatchProcessor(workers=workers).process_items([3, 1, 2], lambda n: n * n)
        assert [entry['result'] for entry in results['success']] == [9, 1, 4]
        assert results['success_count'] == 3

    def test_continue_on_error(self):
        """測試遇到錯誤時繼續"""
        results = BatchProcessor().process_items([1, 0, 2], lambda n: 2 // n)
        assert results['failed_count'] == 1
        assert isinstance(results['failed'][0]['exception'], ZeroDivisionError)
        assert [entry['item'] for entry in results['success']] == [1, 2]

    def test_stop_on_error(self):
        """測試遇到錯誤時停止"""
        processor = BatchProcessor(continue_on_error=False)
        results = processor.process_items([1, 0, 2], lambda n: 2 // n)
        assert results['success_count'] == 1
        assert results['failed_count'] == 1
