"""
檔案工具函數

提供問題檔與係數矩陣檔的讀取
"""

import sys
from pathlib import Path


class FileUtils:
    """檔案處理工具類（'-' 代表 stdin）"""

    STDIN = "-"

    @staticmethod
    def read_text(path: str, encoding: str = "utf-8") -> str:
        """
        讀取文字檔

        Args:
            path: 檔案路徑，'-' 代表 stdin

        Returns:
            str: 檔案內容

        Raises:
            FileNotFoundError: 檔案不存在
        """
        if path == FileUtils.STDIN:
            return sys.stdin.read()
        file_path = Path(path)
        if not file_path.exists():
            raise FileNotFoundError(f"檔案不存在: {path}")
        return file_path.read_text(encoding=encoding)
