"""
設定檔載入器

載入並管理 YAML 設定檔
"""

import yaml
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

DEFAULT_CONFIG_PATH = Path(__file__).parent / "default_config.yaml"


class ConfigError(ValueError):
    """設定檔無法讀取或內容無效"""
    pass


class ConfigLoader:
    """
    載入並管理設定檔

    支援：
    - YAML 格式設定檔
    - 預設值（套件內附的 default_config.yaml）
    - CLI 參數覆寫

    Example:
        >>> config = ConfigLoader("config.yaml")
        >>> fuel = config.get("gb.fuel")
        >>> merged = config.merge_with_args({"gb.fuel": 500})
    """

    def __init__(self, config_path: Optional[str] = None):
        """
        初始化設定載入器

        Args:
            config_path: 設定檔路徑，若為 None 則使用預設設定

        Raises:
            FileNotFoundError: 指定的設定檔不存在
            ConfigError: YAML 格式錯誤
        """
        self.config_path = config_path
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        if self.config_path is None:
            return self._default_config()

        path = Path(self.config_path)
        if not path.exists():
            raise FileNotFoundError(f"設定檔不存在: {self.config_path}")

        try:
            with open(path, 'r', encoding='utf-8') as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"設定檔格式錯誤: {e}")
        if not isinstance(loaded, dict):
            raise ConfigError("設定檔的最上層必須是對應表")
        return self._deep_merge(self._default_config(), loaded)

    def _default_config(self) -> Dict[str, Any]:
        """讀取套件內附的 default_config.yaml"""
        try:
            with open(DEFAULT_CONFIG_PATH, 'r', encoding='utf-8') as f:
                return yaml.safe_load(f) or {}
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"預設設定檔無法讀取: {e}")

    def get(self, key: str, default: Any = None) -> Any:
        """
        取得設定值

        支援點記法存取，如 "gb.fuel"
        """
        value = self.config
        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        keys = key.split('.')
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def merge_with_args(self, cli_args: Dict[str, Any]) -> Dict[str, Any]:
        """
        合併 CLI 參數（CLI 優先），鍵可使用點記法

        Args:
            cli_args: 命令列參數字典，值為 None 的項目略過

        Returns:
            dict: 合併後的設定（不修改原設定）
        """
        merged = self._deep_merge(self.config, {})
        for key, value in cli_args.items():
            if value is None:
                continue
            keys = key.split('.')
            target = merged
            for k in keys[:-1]:
                target = target.setdefault(k, {})
            target[keys[-1]] = value
        return merged

    def validate(self) -> Tuple[bool, List[str]]:
        """以內建 JSON Schema 驗證目前設定"""
        from ..validator import SchemaValidator
        return SchemaValidator.builtin("config").validate(self.config)

    def _deep_merge(self, base: Dict[str, Any],
                    override: Dict[str, Any]) -> Dict[str, Any]:
        result = {k: (self._deep_merge(v, {}) if isinstance(v, dict) else v)
                  for k, v in base.items()}
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = self._deep_merge(result[key], value)
            else:
                result[key] = value
        return result

