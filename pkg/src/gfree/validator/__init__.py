"""
資料驗證模組

提供 JSON Schema 驗證功能（設定檔與係數矩陣檔）
"""

from .schema_validator import SCHEMA_DIR, SchemaValidator

__all__ = ["SCHEMA_DIR", "SchemaValidator"]
