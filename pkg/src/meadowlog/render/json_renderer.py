"""JSON renderer for meadowlog.

Produces valid JSON output for programmatic consumption and piping.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel

from meadowlog.core.values import Peripheral, format_value


class JSONRenderer:
    """JSON renderer for structured output."""

    def __init__(self, indent: int | None = 2, sort_keys: bool = False) -> None:
        """Initialize the JSON renderer.

        Args:
            indent: Number of spaces for indentation. None for compact output.
            sort_keys: Whether to sort dictionary keys in output.
        """
        self._indent = indent
        self._sort_keys = sort_keys

    def render(self, data: Any, template: str) -> str:
        """Render data as JSON; every template produces the same structure."""
        serializable = self._to_serializable(data)
        return json.dumps(
            serializable,
            indent=self._indent,
            sort_keys=self._sort_keys,
            ensure_ascii=False,
        )

    def supports_rich(self) -> bool:
        return False

    def _to_serializable(self, data: Any) -> Any:
        """Convert data to a JSON-serializable form.

        Meadow values become their textual forms, so ``bot`` and exact
        rationals survive the trip.
        """
        if isinstance(data, (Fraction, Peripheral)):
            return format_value(data)
        if isinstance(data, Enum):
            return data.value
        if isinstance(data, BaseModel):
            return self._to_serializable(data.model_dump())
        if isinstance(data, dict):
            return {str(k): self._to_serializable(v) for k, v in data.items()}
        if isinstance(data, (list, tuple)):
            return [self._to_serializable(item) for item in data]
        if hasattr(data, "to_dict"):
            return self._to_serializable(data.to_dict())
        return data
