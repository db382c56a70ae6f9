"""
Schema 驗證器

使用 JSON Schema 驗證設定檔與係數矩陣檔
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from jsonschema import Draft7Validator

SCHEMA_DIR = Path(__file__).parent / "schemas"


class SchemaValidator:
    """
    以 JSON Schema 驗證資料

    Example:
        >>> validator = SchemaValidator.builtin("config")
        >>> is_valid, errors = validator.validate({"gb": {"fuel": -1}})
        >>> errors
        ['[gb.fuel] -1 is less than the minimum of 1']
    """

    def __init__(self, schema_path: Optional[str] = None):
        """
        Args:
            schema_path: JSON Schema 檔案路徑，若為 None 則使用接受任何物件的預設 Schema
        """
        self.schema = self._load_schema(schema_path)
        self.validator = Draft7Validator(self.schema)

    @classmethod
    def builtin(cls, name: str) -> "SchemaValidator":
        """載入內建 Schema：'config' 或 'coeffs'"""
        return cls(str(SCHEMA_DIR / f"{name}_schema.json"))

    def validate(self, data: Any) -> Tuple[bool, List[str]]:
        """
        驗證資料結構

        Returns:
            tuple: (是否通過, 錯誤訊息列表)，訊息依路徑排序
        """
        errors = []
        for error in sorted(self.validator.iter_errors(data), key=lambda e: list(map(str, e.path))):
            error_path = '.'.join(str(p) for p in error.path) if error.path else 'root'
            errors.append(f"[{error_path}] {error.message}")
        return len(errors) == 0, errors

    def _load_schema(self, schema_path: Optional[str]) -> Dict[str, Any]:
        if schema_path is None:
            return self._default_schema()

        path = Path(schema_path)
        if not path.exists():
            raise FileNotFoundError(f"Schema 檔案不存在: {schema_path}")

        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)

    def _default_schema(self) -> Dict[str, Any]:
        return {
            "$schema": "http://json-schema.org/draft-07/schema#",
            "type": "object",
            "additionalProperties": True,
        }
