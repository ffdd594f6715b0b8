"""Unit tests for ConfigService.

This module contains unit tests for the configuration service,
validating configuration loading, validation, and environment handling.
"""

import asyncio
from pathlib import Path

import pytest

from core.models.config import LimitsConfig, LogLevel, RunConfig
from core.models.errors import ConfigurationError
from core.services.config_service import ConfigService


ROOT = Path(__file__).resolve().parents[2]
DEFAULT_CONFIG = ROOT / "config" / "default.yml"


class TestConfigService:
    """Test cases for ConfigService."""

    def setup_method(self):
        """Set up test fixtures."""
        self.config_service = ConfigService()

    def _write(self, tmp_path, text: str) -> str:
        path = tmp_path / "config.yml"
        path.write_text(text, encoding="utf-8")
        return str(path)

    def test_load_default_config(self):
        config = asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert isinstance(config, RunConfig)
        assert config.limits.max_order == 13
        assert config.limits.poly_order_cap == 15
        assert config.workers == 1
        assert config.corpus_dir is None
        assert config.log_level == LogLevel.INFO
        assert self.config_service.validate_config() == []

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            asyncio.run(self.config_service.load_config(str(tmp_path / "absent.yml")))

    def test_empty_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            asyncio.run(self.config_service.load_config(self._write(tmp_path, "")))

    def test_malformed_value(self, tmp_path):
        path = self._write(tmp_path, "workers: many\n")
        with pytest.raises(ConfigurationError):
            asyncio.run(self.config_service.load_config(path))

    def test_partial_limits_keep_defaults(self, tmp_path):
        path = self._write(tmp_path, "limits:\n  max_order: 9\n  sweep_order: 8\n")
        config = asyncio.run(self.config_service.load_config(path))
        assert config.limits.max_order == 9
        assert config.limits.sweep_order == 8
        assert config.limits.poly_order_cap == LimitsConfig().poly_order_cap

    def test_log_files_default_and_override(self, tmp_path):
        config = asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert config.log_files["core.services.verification_service"] == "verify.log"
        assert config.log_dir is None

        path = self._write(tmp_path, "log_dir: logs\nlog_files: null\n")
        config = asyncio.run(self.config_service.load_config(path))
        assert config.log_files == {}
        assert config.log_dir == "logs"

    def test_log_files_must_be_mapping(self, tmp_path):
        path = self._write(tmp_path, "log_files: [corpus.log]\n")
        with pytest.raises(ConfigurationError):
            asyncio.run(self.config_service.load_config(path))

    def test_environment_overrides(self, tmp_path, monkeypatch):
        monkeypatch.setenv("MPG_WORKERS", "3")
        monkeypatch.setenv("MPG_LOG_LEVEL", "debug")
        config = asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert config.workers == 3
        assert config.log_level == LogLevel.DEBUG

    def test_explicit_override(self):
        self.config_service.set_environment_override("limits.max_order", 8)
        config = asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert config.limits.max_order == 8

    def test_get_setting(self):
        asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert self.config_service.get_setting("limits.lemma_order") == 9
        assert self.config_service.get_setting("log_level") == "INFO"
        assert self.config_service.get_setting("limits.unknown", "fallback") == "fallback"

    def test_get_run_config(self):
        assert self.config_service.get_run_config() is None
        config = asyncio.run(self.config_service.load_config(str(DEFAULT_CONFIG)))
        assert self.config_service.get_run_config() is config

    def test_validate_without_config(self):
        assert self.config_service.validate_config() == ["No configuration loaded"]

    def test_reload_without_file(self):
        with pytest.raises(ConfigurationError):
            asyncio.run(self.config_service.reload_config())


class TestRunConfigValidation:
    """Test cases for RunConfig.validate."""

    def test_defaults_are_valid(self):
        assert RunConfig().validate() == []

    def test_sub_limit_above_cap(self):
        config = RunConfig(limits=LimitsConfig(max_order=8))
        assert "limits.sweep_order exceeds limits.max_order" in config.validate()

    def test_bad_values(self):
        config = RunConfig(min_degree=6, workers=0, precision_bits=32, report_format="xml")
        errors = config.validate()
        assert "min_degree must be 3, 4 or 5" in errors
        assert "workers must be positive" in errors
        assert "precision_bits must be at least 64" in errors
        assert "report_format must be json or text" in errors

    def test_empty_log_file_name(self):
        config = RunConfig(log_files={"core.services.corpus_service": ""})
        assert "log_files must map logger names to file names" in config.validate()


if __name__ == "__main__":
    pytest.main([__file__])
