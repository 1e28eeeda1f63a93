"""Property tests for the totalized meadow operations.

Feature: meadowlog, Properties 1-8: Meadow Operations
"""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from meadowlog.core import operations as ops
from meadowlog.core.values import (
    BOT,
    NEG_INF,
    POS_INF,
    Carrier,
    Mode,
    format_value,
    parse_value,
)
from meadowlog.utils.errors import CarrierOverflowError, IllegalValueError, InexactError
from tests.conftest import (
    bottom_value_strategy,
    fraction_strategy,
    nonzero_fraction_strategy,
    signed_value_strategy,
)


@given(x=bottom_value_strategy)
@settings(max_examples=100)
def test_bottom_absorbs(x) -> None:
    """Property 1: Bottom Absorbs.

    Feature: meadowlog, Property 1: Bottom Absorbs
    Any operation with a bot argument yields bot, except that a zero left
    argument of the sequential product and a zero test of the conditional
    shield it.
    """
    assert ops.add(BOT, x) is BOT
    assert ops.add(x, BOT) is BOT
    assert ops.mul(BOT, x) is BOT
    assert ops.mul(x, BOT) is BOT
    assert ops.div(BOT, x) is BOT
    assert ops.div(x, BOT) is BOT
    assert ops.neg(BOT) is BOT
    assert ops.log2(BOT) is BOT
    assert ops.sign(BOT) is BOT
    assert ops.cond(x, BOT, x) is BOT


@given(a=bottom_value_strategy, b=bottom_value_strategy)
@settings(max_examples=100)
def test_add_and_mul_commute(a, b) -> None:
    """Property 2: Commutativity.

    Feature: meadowlog, Property 2: Commutativity
    Addition and multiplication commute on values legal in bottom mode.
    """
    assert ops.add(a, b) == ops.add(b, a)
    assert ops.mul(a, b) == ops.mul(b, a)


@given(a=fraction_strategy, b=fraction_strategy)
@settings(max_examples=100)
def test_ordinary_arithmetic(a: Fraction, b: Fraction) -> None:
    """Property 3: Ordinary Arithmetic.

    Feature: meadowlog, Property 3: Ordinary Arithmetic
    On ordinary values the operations are field arithmetic, and division
    by zero is bot.
    """
    assert ops.add(a, b) == a + b
    assert ops.sub(a, b) == a - b
    assert ops.mul(a, b) == a * b
    if b == 0:
        assert ops.div(a, b) is BOT
    else:
        assert ops.div(a, b) == a / b


@given(x=fraction_strategy, z=fraction_strategy, y=nonzero_fraction_strategy)
@settings(max_examples=100)
def test_conditional_table(x: Fraction, y: Fraction, z: Fraction) -> None:
    """Property 4: Conditional.

    Feature: meadowlog, Property 4: Conditional
    cond(x; 0; z) = z, cond(x; bot; z) = bot and cond(x; y; z) = x for y != 0.
    """
    assert ops.cond(x, Fraction(0), z) == z
    assert ops.cond(x, BOT, z) is BOT
    assert ops.cond(x, y, z) == x


@given(x=bottom_value_strategy, y=bottom_value_strategy)
@settings(max_examples=100)
def test_seqmul_is_guarded_product(x, y) -> None:
    """Property 5: Left-Sequential Multiplication.

    Feature: meadowlog, Property 5: Left-Sequential Multiplication
    x |*| y = cond(x*y; x; 0).
    """
    assert ops.seqmul(x, y) == ops.cond(ops.mul(x, y), x, Fraction(0))


def test_seqmul_shields_bottom_behind_zero() -> None:
    assert ops.seqmul(Fraction(0), BOT) == 0
    assert ops.seqmul(BOT, Fraction(0)) is BOT
    assert ops.seqmul(Fraction(1, 2), BOT) is BOT
    assert ops.mul(Fraction(0), BOT) is BOT


@pytest.mark.parametrize(
    "value, expected",
    [
        (Fraction(8), Fraction(3)),
        (Fraction(1), Fraction(0)),
        (Fraction(1, 4), Fraction(-2)),
        (Fraction(1, 2), Fraction(-1)),
    ],
)
def test_exact_log2_of_powers_of_two(value: Fraction, expected: Fraction) -> None:
    assert ops.log2(value, carrier=Carrier.EXACT) == expected


def test_exact_log2_of_other_values_is_inexact() -> None:
    with pytest.raises(InexactError):
        ops.log2(Fraction(3), carrier=Carrier.EXACT)
    assert math.isclose(ops.log2(3.0), math.log2(3))


@pytest.mark.parametrize(
    "mode, zero, negative",
    [
        (Mode.BOTTOM, BOT, BOT),
        (Mode.SIGNED, NEG_INF, BOT),
        (Mode.SUPPES_ONO, Fraction(0), Fraction(0)),
    ],
)
def test_log2_outside_domain(mode: Mode, zero, negative) -> None:
    """Property 6: Logarithm Cases.

    Feature: meadowlog, Property 6: Logarithm Cases
    log2 of zero and of negatives follows the mode.
    """
    assert ops.log2(Fraction(0), mode) == zero
    assert ops.log2(Fraction(-1), mode) == negative


@given(a=fraction_strategy)
@settings(max_examples=100)
def test_sign_and_square(a: Fraction) -> None:
    """Property 7: Sign.

    Feature: meadowlog, Property 7: Sign
    s(a) is -1, 0 or 1 by the sign of a, and s(a)*s(a) is 1 exactly off zero.
    """
    expected = (a > 0) - (a < 0)
    assert ops.sign(a) == expected
    assert ops.s2(a) == (1 if a != 0 else 0)


class TestSignedMode:
    """Infinity tables of the signed mode."""

    def test_addition(self) -> None:
        assert ops.add(POS_INF, Fraction(1), Mode.SIGNED) is POS_INF
        assert ops.add(NEG_INF, NEG_INF, Mode.SIGNED) is NEG_INF
        assert ops.add(POS_INF, NEG_INF, Mode.SIGNED) is BOT

    def test_multiplication(self) -> None:
        assert ops.mul(Fraction(0), POS_INF, Mode.SIGNED) == 0
        assert ops.mul(NEG_INF, Fraction(-2), Mode.SIGNED) is POS_INF
        assert ops.mul(NEG_INF, POS_INF, Mode.SIGNED) is NEG_INF

    def test_division(self) -> None:
        assert ops.div(Fraction(1), POS_INF, Mode.SIGNED) is BOT
        assert ops.div(POS_INF, Fraction(-2), Mode.SIGNED) is NEG_INF
        assert ops.div(Fraction(1), Fraction(0), Mode.SIGNED) is BOT

    def test_sign_and_log(self) -> None:
        assert ops.sign(POS_INF, Mode.SIGNED) == 1
        assert ops.sign(NEG_INF, Mode.SIGNED) == -1
        assert ops.log2(POS_INF, Mode.SIGNED) is BOT
        assert ops.neg(POS_INF, Mode.SIGNED) is NEG_INF

    @given(a=signed_value_strategy, b=signed_value_strategy)
    @settings(max_examples=100)
    def test_signed_operations_are_total(self, a, b) -> None:
        for result in (
            ops.add(a, b, Mode.SIGNED),
            ops.mul(a, b, Mode.SIGNED),
            ops.div(a, b, Mode.SIGNED),
            ops.seqmul(a, b, Mode.SIGNED),
        ):
            assert result is not None


class TestSuppesOnoMode:
    def test_division_by_zero_is_zero(self) -> None:
        assert ops.div(Fraction(3), Fraction(0), Mode.SUPPES_ONO) == 0

    def test_peripherals_are_illegal(self) -> None:
        with pytest.raises(IllegalValueError):
            ops.mul(BOT, Fraction(1), Mode.SUPPES_ONO)
        with pytest.raises(IllegalValueError):
            ops.add(POS_INF, Fraction(1), Mode.BOTTOM)


def test_approximate_overflow_is_reported() -> None:
    with pytest.raises(CarrierOverflowError):
        ops.mul(1e308, 1e308)


class TestValueText:
    """Property 8: Value Forms.

    Feature: meadowlog, Property 8: Value Forms
    """

    @pytest.mark.parametrize(
        "value, text",
        [
            (Fraction(1, 2), "1/2"),
            (Fraction(-3), "-3"),
            (-0.0, "0"),
            (BOT, "bot"),
            (POS_INF, "+inf"),
        ],
    )
    def test_format(self, value, text: str) -> None:
        assert format_value(value) == text

    @pytest.mark.parametrize(
        "text, value",
        [("0.25", Fraction(1, 4)), ("-3/6", Fraction(-1, 2)), ("bot", BOT), ("-inf", NEG_INF)],
    )
    def test_parse(self, text: str, value) -> None:
        assert parse_value(text) == value

    @pytest.mark.parametrize("text", ["abc", "1/0", ""])
    def test_parse_rejects(self, text: str) -> None:
        with pytest.raises(ValueError):
            parse_value(text)

    @given(value=fraction_strategy)
    @settings(max_examples=50)
    def test_exact_text_reads_back(self, value: Fraction) -> None:
        assert parse_value(format_value(value)) == value
