"""Utilities module for meadowlog."""

from meadowlog.utils.suggestions import (
    fuzzy_match,
    get_config_key_suggestions,
    get_suite_suggestions,
)

__all__ = [
    "fuzzy_match",
    "get_config_key_suggestions",
    "get_suite_suggestions",
]
