"""
報告輸出模組

提供 text（Jinja2 模板）與 machine（key = value）兩種報告格式，以及檢查失敗的收集。
"""

from .report_renderer import SUPPORTED_FORMATS, ReportRenderer, collect_records, render_report
from .error_handler import ReportErrorHandler

__all__ = [
    "SUPPORTED_FORMATS",
    "ReportRenderer",
    "collect_records",
    "render_report",
    "ReportErrorHandler",
]
