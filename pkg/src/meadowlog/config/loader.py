"""Configuration loader for meadowlog.

Handles loading configuration from file and environment variables and
provides defaults for everything else.
"""

import logging
import os
from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import ValidationError

from meadowlog.config.schema import MeadowConfig, OutputFormat
from meadowlog.core.values import Carrier, Mode
from meadowlog.utils.errors import ConfigError
from meadowlog.utils.suggestions import get_config_key_suggestions

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path.home() / ".meadowlog" / "config.yaml"

ENV_PREFIX = "MEADOWLOG_"


def _parse_bool(value: str) -> bool:
    return value.lower() in ("true", "1", "yes", "on")


def _enum_parser(enum_type: type[Enum]) -> Callable[[str], str]:
    valid = [member.value for member in enum_type]

    def parse(value: str) -> str:
        value_lower = value.strip().lower()
        if value_lower not in valid:
            raise ValueError(f"Invalid value '{value}', expected one of: {', '.join(valid)}")
        return value_lower

    return parse


# key -> converter for string input (environment and `config set`)
CONFIG_KEYS: dict[str, Callable[[str], Any]] = {
    "default_output": _enum_parser(OutputFormat),
    "default_mode": _enum_parser(Mode),
    "default_carrier": _enum_parser(Carrier),
    "tolerance": float,
    "seed": int,
    "term_count": int,
    "max_depth": int,
    "max_outcomes": int,
    "bayes_max_outcomes": int,
    "builder_max_n": int,
    "debug_mode": _parse_bool,
}


class ConfigLoader:
    """Loads and manages meadowlog configuration.

    Configuration is loaded with the following precedence (highest to lowest):
    1. Environment variables with MEADOWLOG_ prefix
    2. User config file (~/.meadowlog/config.yaml)
    3. Default values

    Attributes:
        config_path: Path to the configuration file
        config: The loaded MeadowConfig instance
    """

    def __init__(self, config_path: Optional[Path] = None) -> None:
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        self._config: Optional[MeadowConfig] = None

    @property
    def config(self) -> MeadowConfig:
        """Get the loaded configuration, loading if necessary."""
        if self._config is None:
            self._config = self.load()
        return self._config

    def load(self) -> MeadowConfig:
        """Load configuration from file and environment.

        A file that fails validation is ignored with a warning.
        """
        config_dict: dict[str, Any] = {}
        if self.config_path.exists():
            config_dict = self._load_from_file()
        config_dict = self._apply_env_overrides(config_dict)

        try:
            return MeadowConfig(**config_dict)
        except ValidationError as e:
            logger.warning(
                "Invalid configuration in %s, using defaults: %s",
                self.config_path,
                "; ".join(err["msg"] for err in e.errors()),
            )
            return MeadowConfig()

    def _load_from_file(self) -> dict[str, Any]:
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
                return data if isinstance(data, dict) else {}
        except (yaml.YAMLError, OSError) as e:
            logger.warning("Cannot read %s: %s", self.config_path, e)
            return {}

    def _apply_env_overrides(self, config_dict: dict[str, Any]) -> dict[str, Any]:
        """Apply MEADOWLOG_<KEY> environment overrides.

        Examples:
            MEADOWLOG_DEFAULT_MODE=signed
            MEADOWLOG_TERM_COUNT=200
        """
        for key, converter in CONFIG_KEYS.items():
            value = os.environ.get(f"{ENV_PREFIX}{key.upper()}")
            if value is None:
                continue
            try:
                config_dict[key] = converter(value)
            except ValueError:
                logger.warning("Ignoring invalid %s%s=%r", ENV_PREFIX, key.upper(), value)
        return config_dict

    def reload(self) -> MeadowConfig:
        """Force reload configuration from file and environment."""
        self._config = self.load()
        return self._config

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value and persist it to the file.

        Args:
            key: Configuration key
            value: Value to set; strings are converted to the key's type

        Raises:
            ConfigError: If the key is unknown or the value is invalid
        """
        if key not in CONFIG_KEYS:
            close = get_config_key_suggestions(key, list(CONFIG_KEYS))
            hint = f" Did you mean: {', '.join(close)}?" if close else ""
            raise ConfigError(f"Invalid configuration key: {key}.{hint}")
        try:
            converted = CONFIG_KEYS[key](value) if isinstance(value, str) else value
            MeadowConfig(**{key: converted})
        except (ValueError, ValidationError) as e:
            raise ConfigError(f"Invalid value for {key}: {value}") from e

        config_dict = self._load_from_file() if self.config_path.exists() else {}
        config_dict[key] = converted

        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, "w", encoding="utf-8") as f:
            yaml.dump(config_dict, f, default_flow_style=False, sort_keys=False)
        logger.debug("Set %s=%r in %s", key, converted, self.config_path)

        self.reload()

    def get(self, key: str) -> Any:
        """Get a configuration value by key.

        Raises:
            KeyError: If the key does not exist
        """
        if key not in CONFIG_KEYS:
            raise KeyError(f"Configuration key not found: {key}")
        value = getattr(self.config, key)
        return value.value if isinstance(value, Enum) else value

    def show(self) -> dict[str, Any]:
        """All configuration values as a plain dictionary."""
        return self.config.model_dump(mode="json")
