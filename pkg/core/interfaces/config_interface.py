"""Configuration service interface."""

from abc import ABC, abstractmethod
from typing import Any, List, Optional

from core.models.config import RunConfig


class IConfigService(ABC):
    """Interface for configuration management."""

    @abstractmethod
    async def load_config(self, config_path: Optional[str] = None) -> RunConfig:
        """Load the run configuration.

        Args:
            config_path: Path to a yaml file; the packaged default when omitted

        Returns:
            RunConfig object

        Raises:
            ConfigurationError: If config is invalid or not found
        """
        pass

    @abstractmethod
    def validate_config(self) -> List[str]:
        """Validate the loaded configuration.

        Returns:
            List of error messages, empty when the configuration is usable
        """
        pass

    @abstractmethod
    def get_setting(self, key: str, default: Any = None) -> Any:
        """Get a configuration setting by dotted key path.

        Args:
            key: Dotted path such as 'limits.max_order'
            default: Value returned when the key is absent
        """
        pass

    @abstractmethod
    def get_run_config(self) -> Optional[RunConfig]:
        """Get the loaded run configuration, if any."""
        pass
