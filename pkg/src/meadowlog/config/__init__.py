"""Configuration module for meadowlog."""

from meadowlog.config.loader import CONFIG_KEYS, DEFAULT_CONFIG_PATH, ConfigLoader
from meadowlog.config.schema import MeadowConfig, OutputFormat

__all__ = [
    "CONFIG_KEYS",
    "ConfigLoader",
    "DEFAULT_CONFIG_PATH",
    "MeadowConfig",
    "OutputFormat",
]
