"""
報告輸出

machine 格式為每行一筆 `key = value`，依記錄順序輸出，相同輸入得到位元組一致的結果；
text 格式以 Jinja2 模板輸出分段標題與縮排項目。
"""

from itertools import groupby
from pathlib import Path
from typing import Any, Iterable, List, Sequence, Tuple

from jinja2 import Environment, FileSystemLoader, StrictUndefined

SUPPORTED_FORMATS = ("text", "machine")

TEMPLATE_DIR = Path(__file__).parent / "templates"

Record = Tuple[str, str]

SECTION_TITLES = {
    "gb": "Gröbner 基",
    "initial": "初始模",
    "reduce": "化簡",
    "witness": "Freeness witness",
    "stdmon": "標準單項式",
    "hilbert": "Hilbert 函數",
    "fibers": "Fiber 比較",
    "fiber": "Fiber 比較",
    "degeneration": "平坦退化",
    "frobenius": "Frobenius 冪",
    "sqfree": "Square-free 退化",
    "det": "行列式實例",
    "check": "檢查",
    "info": "資訊",
}


def _escape(value: str) -> str:
    return str(value).replace("\\", "\\\\").replace("\n", "\\n")


def collect_records(report: Any) -> List[Record]:
    """
    取得報告的記錄

    Args:
        report: 具有 records() 的物件、(key, value) 列表，或前兩者混合的列表
    """
    if hasattr(report, "records"):
        return list(report.records())
    records: List[Record] = []
    for item in report:
        if hasattr(item, "records"):
            records.extend(item.records())
        else:
            key, value = item
            records.append((key, value))
    return records


class ReportRenderer:
    """
    把記錄渲染成文字

    Example:
        >>> renderer = ReportRenderer()
        >>> print(renderer.render([("witness.value", "3")], "machine"))
        witness.value = 3
    """

    def __init__(self, template_dir: Path = TEMPLATE_DIR):
        self.env = Environment(
            loader=FileSystemLoader(str(template_dir)),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def render(self, report: Any, fmt: str = "text") -> str:
        """
        Args:
            report: 報告物件或記錄列表
            fmt: "text" 或 "machine"

        Raises:
            ValueError: 不支援的格式
        """
        if fmt not in SUPPORTED_FORMATS:
            raise ValueError(f"不支援的格式: {fmt!r}；可用值：{SUPPORTED_FORMATS}")
        records = collect_records(report)
        if fmt == "machine":
            return self.render_machine(records)
        return self.render_text(records)

    @staticmethod
    def render_machine(records: Sequence[Record]) -> str:
        return "".join(f"{key} = {_escape(value)}\n" for key, value in records)

    def render_text(self, records: Sequence[Record]) -> str:
        template = self.env.get_template("report.txt.j2")
        return template.render(sections=self._sections(records))

    @staticmethod
    def _sections(records: Iterable[Record]) -> List[dict]:
        sections = []
        for prefix, rows in groupby(records, key=lambda r: r[0].split(".", 1)[0]):
            items = []
            for key, value in rows:
                label = key.split(".", 1)[1] if "." in key else key
                mark = ""
                if prefix == "check":
                    mark = "✓" if value == "true" else "✗" if value == "false" else "·"
                items.append({"label": label, "value": str(value), "mark": mark})
            sections.append({"title": SECTION_TITLES.get(prefix, prefix), "items": items})
        return sections


def render_report(report: Any, fmt: str = "text") -> str:
    return ReportRenderer().render(report, fmt)
