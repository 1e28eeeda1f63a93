"""Meadow values and totalized operations."""

from meadowlog.core.operations import (
    add,
    cond,
    div,
    log2,
    mul,
    neg,
    s2,
    seqmul,
    sign,
    sub,
)
from meadowlog.core.values import (
    BOT,
    NEG_INF,
    POS_INF,
    Carrier,
    MeadowValue,
    Mode,
    Ordinary,
    Peripheral,
    coerce,
    format_value,
    is_ordinary,
    is_peripheral,
    parse_value,
)

__all__ = [
    "BOT",
    "NEG_INF",
    "POS_INF",
    "Carrier",
    "MeadowValue",
    "Mode",
    "Ordinary",
    "Peripheral",
    "add",
    "coerce",
    "cond",
    "div",
    "format_value",
    "is_ordinary",
    "is_peripheral",
    "log2",
    "mul",
    "neg",
    "parse_value",
    "s2",
    "seqmul",
    "sign",
    "sub",
]
