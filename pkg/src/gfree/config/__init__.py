"""
設定檔處理模組

提供 YAML 設定檔的載入和管理功能
"""

from .config_loader import DEFAULT_CONFIG_PATH, ConfigError, ConfigLoader

__all__ = ["DEFAULT_CONFIG_PATH", "ConfigError", "ConfigLoader"]
