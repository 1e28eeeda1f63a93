"""Configuration schema for meadowlog.

Defines the Pydantic model for configuration validation and defaults.
"""

from enum import Enum

from pydantic import BaseModel, Field

from meadowlog.core.values import Carrier, Mode


class OutputFormat(str, Enum):
    """Output format options for CLI commands."""

    RICH = "rich"
    PLAIN = "plain"
    JSON = "json"


class MeadowConfig(BaseModel):
    """Main configuration schema for meadowlog.

    Attributes:
        default_output: Default output format (rich, plain, json)
        default_mode: Semantic mode used when --mode is not given
        default_carrier: Number backend used when --carrier is not given
        tolerance: Relative tolerance of approximate comparisons
        seed: Seed of the random term stream of the flatten suite
        term_count: Number of random terms the flatten suite checks
        max_depth: Depth bound of random terms
        max_outcomes: Largest event space of the bayes suite
        bayes_max_outcomes: Largest pmf the bayes command checks
        builder_max_n: Largest sample count of the builders suite
        debug_mode: Enable debug logging
    """

    default_output: OutputFormat = OutputFormat.RICH
    default_mode: Mode = Mode.BOTTOM
    default_carrier: Carrier = Carrier.APPROX
    tolerance: float = Field(default=1e-9, gt=0)
    seed: int = 1
    term_count: int = Field(default=1000, ge=1)
    max_depth: int = Field(default=4, ge=1, le=6)
    max_outcomes: int = Field(default=3, ge=1, le=4)
    bayes_max_outcomes: int = Field(default=8, ge=1, le=12)
    builder_max_n: int = Field(default=4, ge=1, le=5)
    debug_mode: bool = False
