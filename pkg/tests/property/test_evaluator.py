"""Property tests for term evaluation.

Feature: meadowlog, Properties 12-13 and 42: Evaluation
"""

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from meadowlog.core.values import BOT, NEG_INF, Carrier, Mode, Peripheral
from meadowlog.engine import Environment, evaluate
from meadowlog.oracle.grid import DEFAULT_GRID, values_agree
from meadowlog.oracle.random_terms import random_terms
from meadowlog.terms import BOTTOM, Const, Neg, Signature, Term, free_variables, parse, substitute
from meadowlog.utils.errors import (
    BottomLiteralError,
    IllegalLiteralError,
    InexactError,
    UnboundSymbolError,
)
from tests.conftest import bottom_value_strategy, seed_strategy


def _literal(value) -> Term:
    if isinstance(value, Peripheral):
        return Const(value)
    if value < 0:
        return Neg(Const(-value))
    return Const(value)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1/0", BOT),
        ("0 * (1/0)", BOT),
        ("0 |*| (1/0)", Fraction(0)),
        ("log2(0)", BOT),
        ("log2(1/8)", Fraction(-3)),
        ("cond(1; 0; 2)", Fraction(2)),
        ("cond(1; bot; 2)", BOT),
        ("s(-3)", Fraction(-1)),
        ("1/2 + 1/4", Fraction(3, 4)),
    ],
)
def test_closed_terms(text: str, expected) -> None:
    assert evaluate(parse(text), carrier=Carrier.EXACT) == expected


def test_variables_and_function_tables() -> None:
    env = Environment(
        variables={"x": Fraction(0)},
        functions={"alpha": {"c1": Fraction(1, 2), "c2": Fraction(1, 2)}},
    )
    assert env.labels == ("c1", "c2")
    assert evaluate(parse("x |*| log2(x)"), env, carrier=Carrier.EXACT) == 0
    assert evaluate(parse("alpha(c1) + alpha(c2)"), env, carrier=Carrier.EXACT) == 1


def test_signed_mode_evaluation() -> None:
    assert evaluate(parse("log2(0)"), mode=Mode.SIGNED) is NEG_INF
    assert evaluate(parse("1/+inf"), mode=Mode.SIGNED) is BOT
    assert evaluate(parse("0 * +inf"), mode=Mode.SIGNED) == 0


def test_suppes_mode_evaluation() -> None:
    assert evaluate(parse("3/0"), mode=Mode.SUPPES_ONO) == 0
    assert evaluate(parse("log2(0)"), mode=Mode.SUPPES_ONO) == 0


class TestEvaluationErrors:
    def test_unbound_variable(self) -> None:
        with pytest.raises(UnboundSymbolError) as info:
            evaluate(parse("x + 1"))
        assert info.value.symbol == "x"

    def test_unbound_application(self) -> None:
        env = Environment(functions={"alpha": {"c1": Fraction(1)}})
        with pytest.raises(UnboundSymbolError):
            evaluate(parse("alpha(c2)"), env)

    def test_incomplete_function_table(self) -> None:
        with pytest.raises(UnboundSymbolError):
            Environment(
                functions={"alpha": {"c1": Fraction(1)}, "beta": {"c2": Fraction(1)}}
            )

    def test_literals_outside_their_mode(self) -> None:
        with pytest.raises(BottomLiteralError):
            evaluate(parse("bot"), mode=Mode.SUPPES_ONO)
        with pytest.raises(IllegalLiteralError):
            evaluate(parse("+inf"), mode=Mode.BOTTOM)

    def test_exact_irrational_logarithm(self) -> None:
        with pytest.raises(InexactError):
            evaluate(parse("log2(3)"), carrier=Carrier.EXACT)
        assert evaluate(parse("log2(4)"), carrier=Carrier.APPROX) == 2.0


@given(
    seed=seed_strategy,
    depth=st.integers(min_value=1, max_value=4),
    value=bottom_value_strategy,
)
@settings(max_examples=200)
def test_substitution_lemma(seed: int, depth: int, value) -> None:
    """Property 12: Substitution Lemma.

    Feature: meadowlog, Property 12: Substitution Lemma
    Evaluating t with x bound to v equals evaluating t with the literal for
    v substituted for x.
    """
    (term,) = random_terms(seed, depth, variables=("x",))
    env = Environment(variables={"x": value})
    try:
        bound = evaluate(term, env, carrier=Carrier.EXACT)
    except InexactError:
        assume(False)
    substituted = evaluate(substitute(term, {"x": _literal(value)}), carrier=Carrier.EXACT)
    assert bound == substituted


@given(seed=seed_strategy)
@settings(max_examples=100)
def test_bottom_operand_propagates(seed: int) -> None:
    """Property 13: Strictness Outside Guards.

    Feature: meadowlog, Property 13: Strictness Outside Guards
    A term built from add, neg, mul, div, log2 and sign alone is bot as soon
    as one of its leaves is bot.
    """
    strict = Signature(operators=frozenset({"add", "neg", "mul", "div", "log2", "sign"}))
    (term,) = random_terms(seed, 4, signature=strict, variables=("x",))
    assume("x" in free_variables(term))
    assert evaluate(term, Environment(variables={"x": BOT})) is BOT
    assert evaluate(substitute(term, {"x": BOTTOM})) is BOT


@given(seed=seed_strategy, depth=st.integers(min_value=1, max_value=3))
@settings(max_examples=100, deadline=None)
def test_carriers_agree_on_grid(seed: int, depth: int) -> None:
    """Property 42: Carrier Agreement.

    Feature: meadowlog, Property 42: Carrier Agreement
    Wherever the exact carrier has a value, the approximate carrier is bot at
    the same assignments and numerically close elsewhere.
    """
    (term,) = random_terms(seed, depth, variables=("x", "y"))
    for x, y in product(DEFAULT_GRID.values, repeat=2):
        env = Environment(variables={"x": x, "y": y})
        try:
            exact = evaluate(term, env, carrier=Carrier.EXACT)
        except InexactError:
            continue
        approx = evaluate(term, env, carrier=Carrier.APPROX)
        assert (exact is BOT) == (approx is BOT), f"x={x}, y={y}"
        assert values_agree(exact, approx), f"x={x}, y={y}: {exact} vs {approx}"
