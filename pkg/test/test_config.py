"""
設定檔載入器測試
"""

import pytest
import sys
from pathlib import Path

import yaml

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.config import ConfigError, ConfigLoader, DEFAULT_CONFIG_PATH


ROOT_CONFIG = Path(__file__).parent.parent / 'config.yaml'


class TestConfigLoader:
    """設定載入測試"""

    def test_defaults(self):
        """測試預設設定"""
        config = ConfigLoader()
        assert config.get("gb.fuel") == 1000000
        assert config.get("freeness.default_points") == 3
        assert config.get("missing.key", "x") == "x"

    def test_default_file_matches(self):
        """測試預設值取自 default_config.yaml"""
        with open(DEFAULT_CONFIG_PATH, encoding='utf-8') as f:
            assert yaml.safe_load(f) == ConfigLoader()._default_config()

    def test_root_config_is_valid(self):
        """測試專案根目錄的設定檔範例"""
        config = ConfigLoader(str(ROOT_CONFIG))
        assert config.get("logging.level") == "WARNING"
        assert config.validate() == (True, [])

    def test_partial_file_merges_defaults(self, tmp_path):
        """測試未列出的鍵使用預設值"""
        path = tmp_path / "partial.yaml"
        path.write_text("gb:\n  fuel: 50\n", encoding='utf-8')
        config = ConfigLoader(str(path))
        assert config.get("gb.fuel") == 50
        assert config.get("gb.tail_reduce") is True
        assert config.get("parallel.workers") == 1

    def test_missing_file(self, tmp_path):
        """測試設定檔不存在"""
        with pytest.raises(FileNotFoundError):
            ConfigLoader(str(tmp_path / "none.yaml"))

    def test_invalid_yaml(self, tmp_path):
        """測試 YAML 格式錯誤"""
        path = tmp_path / "bad.yaml"
        path.write_text("gb: [1, 2\n", encoding='utf-8')
        with pytest.raises(ConfigError):
            ConfigLoader(str(path))

    def test_top_level_must_be_mapping(self, tmp_path):
        """測試最上層必須是對應表"""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding='utf-8')
        with pytest.raises(ConfigError):
            ConfigLoader(str(path))

    def test_merge_with_args(self):
        """測試 CLI 參數覆寫且不修改原設定"""
        config = ConfigLoader()
        merged = config.merge_with_args({"gb.fuel": 10, "parallel.workers": None})
        assert merged["gb"]["fuel"] == 10
        assert merged["parallel"]["workers"] == 1
        assert config.get("gb.fuel") == 1000000

    def test_set_and_validate(self):
        """測試設定無效值後驗證失敗"""
        config = ConfigLoader()
        config.set("gb.fuel", 0)
        is_valid, errors = config.validate()
        assert not is_valid
        assert errors[0].startswith("[gb.fuel]")

