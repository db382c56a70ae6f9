"""
Schema 驗證器測試
"""

import json
import pytest
import sys
from pathlib import Path

import yaml

# 添加 src 到 path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from gfree.validator import SchemaValidator


SAMPLES = Path(__file__).parent / 'sample_inputs'


class TestSchemaValidator:
    """Schema 驗證器測試"""

    def test_default_schema_accepts_objects(self):
        """測試預設 Schema"""
        is_valid, errors = SchemaValidator().validate({"任意": 1})
        assert is_valid
        assert errors == []

    def test_config_schema(self):
        """測試設定檔 Schema"""
        validator = SchemaValidator.builtin("config")
        assert validator.validate({"gb": {"fuel": 10}, "parallel": {"workers": 2}})[0]

    def test_config_errors_have_paths(self):
        """測試錯誤訊息包含路徑"""
        validator = SchemaValidator.builtin("config")
        is_valid, errors = validator.validate({"gb": {"fuel": -1}})
        assert not is_valid
        assert errors == ["[gb.fuel] -1 is less than the minimum of 1"]

    def test_unknown_key(self):
        """測試未知的設定鍵"""
        is_valid, errors = SchemaValidator.builtin("config").validate({"excel": {}})
        assert not is_valid
        assert errors[0].startswith("[root]")

    def test_log_level_enum(self):
        """測試日誌等級"""
        is_valid, _ = SchemaValidator.builtin("config").validate({"logging": {"level": "LOUD"}})
        assert not is_valid

    @pytest.mark.parametrize("name", ["coeffs_a11.yaml", "coeffs_a23.yaml"])
    def test_coeff_samples(self, name):
        """測試係數矩陣範例檔"""
        with open(SAMPLES / name, encoding='utf-8') as f:
            data = yaml.safe_load(f)
        assert SchemaValidator.builtin("coeffs").validate(data) == (True, [])

    def test_coeffs_accept_literals(self):
        """測試係數可為字串字面值"""
        assert SchemaValidator.builtin("coeffs").validate([["1/2", 1], ["t + 1", 3]])[0]

    def test_coeffs_reject_nested(self):
        """測試非矩陣資料"""
        validator = SchemaValidator.builtin("coeffs")
        assert not validator.validate([1, 2])[0]
        assert not validator.validate([])[0]
        assert not validator.validate([[1.5]])[0]

    def test_load_custom_schema(self, tmp_path):
        """測試載入自訂 Schema"""
        path = tmp_path / "schema.json"
        path.write_text(json.dumps({"type": "array"}), encoding='utf-8')
        validator = SchemaValidator(str(path))
        assert validator.validate([1])[0]
        assert not validator.validate({})[0]

    def test_missing_schema(self, tmp_path):
        """測試 Schema 檔案不存在"""
        with pytest.raises(FileNotFoundError):
            SchemaValidator(str(tmp_path / "none.json"))
