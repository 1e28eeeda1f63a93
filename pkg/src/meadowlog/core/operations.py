"""Totalized meadow operations for the bottom, signed and Suppes-Ono modes.

Every function is total on the values legal for its mode. Ordinary
arguments take the fast path; peripheral arguments are dispatched to
small per-mode tables. The signed tables are closed under sign symmetry.
"""

import math
from fractions import Fraction

from meadowlog.core.values import (
    BOT,
    NEG_INF,
    POS_INF,
    Carrier,
    MeadowValue,
    Mode,
    Peripheral,
    carrier_of,
    one_like,
    zero_like,
)
from meadowlog.utils.errors import CarrierOverflowError, IllegalValueError, InexactError


def _check_legal(value: Peripheral, mode: Mode) -> None:
    if mode is Mode.SUPPES_ONO or (mode is Mode.BOTTOM and value is not BOT):
        raise IllegalValueError(value.value, mode.value)


def _finite(value: MeadowValue, operation: str) -> MeadowValue:
    if isinstance(value, float) and not math.isfinite(value):
        raise CarrierOverflowError(operation)
    return value


def _flip(value: Peripheral) -> Peripheral:
    if value is POS_INF:
        return NEG_INF
    if value is NEG_INF:
        return POS_INF
    return value


def add(a: MeadowValue, b: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Totalized addition.

    Args:
        a: Left summand.
        b: Right summand.
        mode: Semantic mode.

    Returns:
        ``a + b`` on ordinaries; ``bot`` absorbs; in signed mode an infinity
        dominates ordinaries and opposite infinities give ``bot``.
    """
    a_peripheral = isinstance(a, Peripheral)
    b_peripheral = isinstance(b, Peripheral)
    if not (a_peripheral or b_peripheral):
        return _finite(a + b, "add")
    for value in (a, b):
        if isinstance(value, Peripheral):
            _check_legal(value, mode)
    if a is BOT or b is BOT:
        return BOT
    if a_peripheral and b_peripheral:
        return a if a is b else BOT
    return a if a_peripheral else b


def neg(a: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Totalized negation; infinities swap sign and ``bot`` is fixed."""
    if isinstance(a, Peripheral):
        _check_legal(a, mode)
        return _flip(a)
    return 0 - a


def sub(a: MeadowValue, b: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """``a - b`` as ``a + (-b)``."""
    return add(a, neg(b, mode), mode)


def mul(a: MeadowValue, b: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Totalized multiplication.

    In signed mode ``0 * inf = 0``, an infinity times a nonzero ordinary
    keeps or flips its sign, and two infinities multiply their signs.
    """
    a_peripheral = isinstance(a, Peripheral)
    b_peripheral = isinstance(b, Peripheral)
    if not (a_peripheral or b_peripheral):
        return _finite(a * b, "mul")
    for value in (a, b):
        if isinstance(value, Peripheral):
            _check_legal(value, mode)
    if a is BOT or b is BOT:
        return BOT
    if a_peripheral and b_peripheral:
        return POS_INF if a is b else NEG_INF
    infinity, other = (a, b) if a_peripheral else (b, a)
    if other == 0:
        return zero_like(other)
    return infinity if other > 0 else _flip(infinity)


def div(a: MeadowValue, b: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Totalized division.

    Bottom and signed mode read ``a / b`` as ``a * (1/b)`` with
    ``1/0 = 1/bot = 1/inf = bot``. Suppes-Ono mode sets ``a / 0 = 0``.
    """
    if isinstance(b, Peripheral):
        _check_legal(b, mode)
        if isinstance(a, Peripheral):
            _check_legal(a, mode)
        return BOT
    if b == 0:
        if mode is Mode.SUPPES_ONO:
            if isinstance(a, Peripheral):
                _check_legal(a, mode)
            return zero_like(b)
        if isinstance(a, Peripheral):
            _check_legal(a, mode)
        return BOT
    if isinstance(a, Peripheral):
        _check_legal(a, mode)
        if a is BOT:
            return BOT
        return a if b > 0 else _flip(a)
    return _finite(a / b, "div")


def _exact_log2(value: Fraction) -> Fraction:
    numerator, denominator = value.numerator, value.denominator
    if numerator & (numerator - 1) or denominator & (denominator - 1):
        raise InexactError(value)
    return Fraction(numerator.bit_length() - denominator.bit_length())


def log2(
    a: MeadowValue,
    mode: Mode = Mode.BOTTOM,
    carrier: Carrier | None = None,
) -> MeadowValue:
    """Totalized base-2 logarithm.

    Args:
        a: The argument.
        mode: Semantic mode.
        carrier: Carrier of the result; inferred from ``a`` when omitted.

    Returns:
        ``log2 a`` for positive ordinaries. For ``a <= 0``: ``bot`` in bottom
        mode, ``0`` in Suppes-Ono mode, and in signed mode ``-inf`` at zero
        and ``bot`` below. ``log2`` of any peripheral is ``bot``.

    Raises:
        InexactError: On the exact carrier when ``a`` is not a power of two.
    """
    if isinstance(a, Peripheral):
        _check_legal(a, mode)
        return BOT
    if carrier is None:
        carrier = carrier_of(a)
    if a > 0:
        if carrier is Carrier.EXACT:
            return _exact_log2(Fraction(a))
        return math.log2(a)
    if mode is Mode.SUPPES_ONO:
        return 0.0 if carrier is Carrier.APPROX else Fraction(0)
    if mode is Mode.SIGNED and a == 0:
        return NEG_INF
    return BOT


def cond(
    x: MeadowValue,
    y: MeadowValue,
    z: MeadowValue,
    mode: Mode = Mode.BOTTOM,
) -> MeadowValue:
    """The conditional ``x <| y |> z``.

    Returns ``z`` when ``y`` is zero, ``bot`` when ``y`` is ``bot`` and ``x``
    for every other test value, infinities included.
    """
    for value in (x, z):
        if isinstance(value, Peripheral):
            _check_legal(value, mode)
    if isinstance(y, Peripheral):
        _check_legal(y, mode)
        return BOT if y is BOT else x
    return z if y == 0 else x


def seqmul(x: MeadowValue, y: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Left-sequential multiplication ``(x * y) <| x |> 0``."""
    return cond(mul(x, y, mode), x, zero_like(x), mode)


def sign(a: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """Sign function; ``s(+inf) = 1``, ``s(-inf) = -1`` and ``s(bot) = bot``."""
    if isinstance(a, Peripheral):
        _check_legal(a, mode)
        if a is BOT:
            return BOT
        return Fraction(1) if a is POS_INF else Fraction(-1)
    if a > 0:
        return one_like(a)
    if a < 0:
        return 0 - one_like(a)
    return zero_like(a)


def s2(a: MeadowValue, mode: Mode = Mode.BOTTOM) -> MeadowValue:
    """``s(a) * s(a)``: one on nonzero ordinaries, zero at zero."""
    signum = sign(a, mode)
    return mul(signum, signum, mode)
