"""Fuzzy matching utilities for suggestions.

Used to suggest suite names and configuration keys when the
user mistypes one.
"""

import difflib
from typing import Sequence


def fuzzy_match(
    query: str,
    possibilities: Sequence[str],
    n: int = 3,
    cutoff: float = 0.5,
) -> list[str]:
    """Find close matches for a query string, ignoring case.

    Args:
        query: The search query string.
        possibilities: Sequence of possible matches.
        n: Maximum number of suggestions to return.
        cutoff: Similarity threshold between 0.0 and 1.0.

    Returns:
        Matching strings from possibilities in their original case.

    Example:
        >>> fuzzy_match("absorb", ["absorption", "bayes", "signed"])
        ['absorption']
    """
    if not query or not possibilities:
        return []

    lower_to_original: dict[str, str] = {}
    for item in possibilities:
        lower_to_original.setdefault(item.lower(), item)

    matches = difflib.get_close_matches(
        query.lower(),
        lower_to_original.keys(),
        n=n,
        cutoff=cutoff,
    )
    return [lower_to_original[m] for m in matches]


def get_suite_suggestions(
    invalid_suite: str,
    valid_suites: Sequence[str],
    n: int = 3,
) -> list[str]:
    """Get suggestions for an unknown oracle suite name.

    Args:
        invalid_suite: The suite name that was not recognized.
        valid_suites: Registered suite names.
        n: Maximum number of suggestions to return.

    Returns:
        A list of suggested suite names.
    """
    return fuzzy_match(invalid_suite, valid_suites, n=n, cutoff=0.4)


def get_config_key_suggestions(
    invalid_key: str,
    valid_keys: Sequence[str],
    n: int = 3,
) -> list[str]:
    """Get suggestions for an unknown configuration key.

    Args:
        invalid_key: The key that was not recognized.
        valid_keys: Known configuration keys.
        n: Maximum number of suggestions to return.

    Returns:
        A list of suggested keys.
    """
    return fuzzy_match(invalid_key, valid_keys, n=n, cutoff=0.5)
