"""Configuration service implementation."""

import logging
import os
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from core.interfaces.config_interface import IConfigService
from core.models.config import LimitsConfig, LogLevel, RunConfig
from core.models.errors import ConfigurationError
from core.utils.constants import (
    DEFAULT_CONFIG_PATH,
    DEFAULT_LOG_FILES,
    ENV_LOG_LEVEL,
    ENV_OUTPUT_DIR,
    ENV_PRECISION_BITS,
    ENV_WORKERS,
)


class ConfigService(IConfigService):
    """Implementation of configuration service."""

    def __init__(self, config_file_path: Optional[str] = None):
        self.logger = logging.getLogger(__name__)
        self._config_file_path = config_file_path
        self._run_config: Optional[RunConfig] = None
        self._config_cache: Dict[str, Any] = {}
        self._environment_overrides: Dict[str, Any] = {}

        if config_file_path:
            self._load_run_config_sync(config_file_path)

    def _handle_error(self, operation: str, error: Exception) -> None:
        """Centralized error handling and logging."""
        self.logger.error(f"Error {operation}: {str(error)}")
        raise error

    async def load_config(self, config_path: Optional[str] = None) -> RunConfig:
        """Load configuration from default or specified path.

        Args:
            config_path: Optional path to configuration file. Defaults to 'config/default.yml'
        """
        if config_path is None:
            config_path = DEFAULT_CONFIG_PATH

        return await self.load_run_config(config_path)

    async def load_run_config(self, config_path: str) -> RunConfig:
        return self._load_run_config_sync(config_path)

    def _load_run_config_sync(self, config_file_path: str) -> RunConfig:
        """Synchronous implementation of config loading."""
        try:
            config_path = Path(config_file_path)

            if not config_path.exists():
                raise ConfigurationError(f"Configuration file not found: {config_file_path}")

            with open(config_path, "r", encoding="utf-8") as file:
                raw_config = yaml.safe_load(file)

            if not raw_config or not isinstance(raw_config, dict):
                raise ConfigurationError("Configuration file is empty or invalid")

            self._apply_environment_overrides(raw_config)
            self._run_config = self._parse_run_config(raw_config)
            self._config_file_path = config_file_path
            self._config_cache["raw"] = raw_config

            return self._run_config

        except yaml.YAMLError as e:
            self._handle_error("loading configuration", ConfigurationError(str(e)))
        except ConfigurationError as e:
            self._handle_error("loading configuration", e)

    def _parse_run_config(self, raw_config: Dict[str, Any]) -> RunConfig:
        """Parse raw configuration into a RunConfig object."""
        try:
            limits_data = raw_config.get("limits", {}) or {}
            defaults = LimitsConfig()
            limits = LimitsConfig(
                **{
                    name: int(limits_data.get(name, getattr(defaults, name)))
                    for name in asdict(defaults)
                }
            )

            return RunConfig(
                name=raw_config.get("name", "mpg-verification"),
                limits=limits,
                min_degree=int(raw_config.get("min_degree", 3)),
                precision_bits=int(raw_config.get("precision_bits", 128)),
                workers=int(raw_config.get("workers", 1)),
                seed=int(raw_config.get("seed", 20240601)),
                output_dir=raw_config.get("output_dir", "output"),
                corpus_dir=raw_config.get("corpus_dir"),
                golden_dir=raw_config.get("golden_dir", "golden"),
                report_format=raw_config.get("report_format", "json"),
                suppress_timestamp=bool(raw_config.get("suppress_timestamp", False)),
                log_level=self._parse_log_level(raw_config.get("log_level", "INFO")),
                log_dir=raw_config.get("log_dir"),
                log_files=self._parse_log_files(raw_config.get("log_files", DEFAULT_LOG_FILES)),
            )

        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Error parsing configuration: {str(e)}")

    def _parse_log_files(self, raw: Any) -> Dict[str, str]:
        """Logger name to file name; null disables the service log files."""
        if raw is None:
            return {}
        if not isinstance(raw, dict):
            raise ValueError(f"log_files must be a mapping, got {type(raw).__name__}")
        return {str(name): str(file_name) for name, file_name in raw.items()}

    def _parse_log_level(self, log_level_str: str) -> LogLevel:
        """Parse log level string into LogLevel enum."""
        try:
            return LogLevel[log_level_str.upper()]
        except (KeyError, AttributeError):
            return LogLevel.INFO

    def _apply_environment_overrides(self, config: Dict[str, Any]) -> None:
        """Apply environment variable overrides to configuration."""
        for key, value in self._environment_overrides.items():
            self._set_nested_value(config, key, value)

        env_mappings = {
            ENV_WORKERS: "workers",
            ENV_LOG_LEVEL: "log_level",
            ENV_OUTPUT_DIR: "output_dir",
            ENV_PRECISION_BITS: "precision_bits",
        }

        for env_var, config_key in env_mappings.items():
            env_value = os.getenv(env_var)
            if env_value is not None:
                if env_value.lower() in ["true", "false"]:
                    env_value = env_value.lower() == "true"
                elif env_value.isdigit():
                    env_value = int(env_value)

                self._set_nested_value(config, config_key, env_value)

    def _set_nested_value(self, config: Dict[str, Any], key_path: str, value: Any) -> None:
        """Set a nested value in configuration dictionary."""
        keys = key_path.split(".")
        current = config

        for key in keys[:-1]:
            if key not in current or not isinstance(current[key], dict):
                current[key] = {}
            current = current[key]

        current[keys[-1]] = value

    def set_environment_override(self, key: str, value: Any) -> None:
        """Set an override applied on the next load."""
        self._environment_overrides[key] = value

    def validate_config(self) -> List[str]:
        if not self._run_config:
            return ["No configuration loaded"]
        return self._run_config.validate()

    def get_setting(self, key: str, default: Any = None) -> Any:
        """Get a configuration setting by key path (e.g., 'limits.max_order')."""
        if not self._run_config:
            return default

        value: Any = asdict(self._run_config)
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        if isinstance(value, LogLevel):
            return value.value
        return value

    def get_run_config(self) -> Optional[RunConfig]:
        return self._run_config

    async def reload_config(self) -> RunConfig:
        """Reload configuration from source."""
        if not self._config_file_path:
            self._handle_error("reloading configuration", ConfigurationError("No configuration file loaded"))

        self._config_cache.clear()
        return await self.load_run_config(self._config_file_path)
