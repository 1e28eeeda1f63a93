"""Carrier values, semantic modes and their textual forms.

An ordinary value is a :class:`fractions.Fraction` on the exact carrier
or a finite ``float`` on the approximate carrier. Peripheral values are
the three members of :class:`Peripheral`; only ``BOTTOM`` is legal in
bottom mode, all three in signed mode and none in Suppes-Ono mode.
"""

from enum import Enum
from fractions import Fraction
from typing import TypeAlias


class Mode(str, Enum):
    """Semantic mode of the totalized operations."""

    BOTTOM = "bot"
    SIGNED = "signed"
    SUPPES_ONO = "suppes"


class Carrier(str, Enum):
    """Number backend for ordinary values."""

    EXACT = "exact"
    APPROX = "approx"


class Peripheral(Enum):
    """Values adjoined to the ordinary numbers."""

    BOTTOM = "bot"
    POS_INF = "+inf"
    NEG_INF = "-inf"

    def __str__(self) -> str:
        return self.value


BOT = Peripheral.BOTTOM
POS_INF = Peripheral.POS_INF
NEG_INF = Peripheral.NEG_INF

Ordinary: TypeAlias = Fraction | float
MeadowValue: TypeAlias = Fraction | float | Peripheral

APPROX_DIGITS = 12

_PERIPHERAL_TEXT = {p.value: p for p in Peripheral}


def is_peripheral(value: MeadowValue) -> bool:
    """Return True for ``bot``, ``+inf`` and ``-inf``."""
    return isinstance(value, Peripheral)


def is_ordinary(value: MeadowValue) -> bool:
    """Return True for a number on either carrier."""
    return not isinstance(value, Peripheral)


def carrier_of(value: MeadowValue) -> Carrier:
    """Infer the carrier an ordinary value lives on.

    Peripherals and exact numbers report ``EXACT``; floats report ``APPROX``.
    """
    return Carrier.APPROX if isinstance(value, float) else Carrier.EXACT


def zero_like(value: MeadowValue) -> Ordinary:
    """Zero on the carrier of ``value``."""
    return 0.0 if isinstance(value, float) else Fraction(0)


def one_like(value: MeadowValue) -> Ordinary:
    """One on the carrier of ``value``."""
    return 1.0 if isinstance(value, float) else Fraction(1)


def coerce(value: MeadowValue | int, carrier: Carrier) -> MeadowValue:
    """Move an ordinary value onto ``carrier``.

    Floats become exact fractions without rounding; peripherals are
    returned unchanged.

    Args:
        value: The value to move.
        carrier: Target carrier.

    Returns:
        The value represented on the target carrier.
    """
    if isinstance(value, Peripheral):
        return value
    if carrier is Carrier.EXACT:
        return value if isinstance(value, Fraction) else Fraction(value)
    return float(value)


def parse_value(text: str) -> MeadowValue:
    """Parse a textual value form.

    Accepts ``bot``, ``+inf``, ``-inf``, signed integers, signed rationals
    ``a/b`` and terminating decimals. Ordinary results are exact.

    Args:
        text: The text to parse.

    Returns:
        The parsed value.

    Raises:
        ValueError: If the text is not a value form.
    """
    stripped = text.strip()
    if stripped in _PERIPHERAL_TEXT:
        return _PERIPHERAL_TEXT[stripped]
    try:
        return Fraction(stripped)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not a meadow value: '{text}'") from e


def format_value(value: MeadowValue) -> str:
    """Render a value in its canonical textual form.

    Exact values print as ``a/b`` or ``a``; approximate values print with
    twelve significant digits and without a negative zero.
    """
    if isinstance(value, Peripheral):
        return value.value
    if isinstance(value, float):
        if value == 0:
            return "0"
        return f"{value:.{APPROX_DIGITS}g}"
    return str(Fraction(value))

