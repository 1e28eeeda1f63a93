"""Property tests for the term language.

Feature: meadowlog, Properties 9-11: Term Language
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meadowlog.core.values import Peripheral
from meadowlog.oracle.random_terms import random_terms
from meadowlog.terms import (
    BOTTOM,
    Add,
    Cond,
    Const,
    Div,
    FunApp,
    Log2,
    Mul,
    Neg,
    SeqMul,
    Sign,
    Signature,
    Var,
    free_variables,
    generalized_sum,
    parse,
    sample_constants,
    substitute,
    sum_terms,
    to_text,
)
from meadowlog.utils.errors import (
    IllegalLiteralError,
    SignatureError,
    TermError,
    TermSyntaxError,
)
from tests.conftest import seed_strategy

x, y, z = Var("x"), Var("y"), Var("z")


class TestParse:
    @pytest.mark.parametrize(
        "text, term",
        [
            ("x + y*z", Add(x, Mul(y, z))),
            ("x - y", Add(x, Neg(y))),
            ("x / y / z", Div(Div(x, y), z)),
            ("1/2", Const(Fraction(1, 2))),
            ("1/0", Div(Const(Fraction(1)), Const(Fraction(0)))),
            ("x |*| log2(x)", SeqMul(x, Log2(x))),
            ("cond(x; y; z)", Cond(x, y, z)),
            ("s(x)*s(x)", Mul(Sign(x), Sign(x))),
            ("alpha(c1)", FunApp("alpha", "c1")),
            ("-bot", Neg(BOTTOM)),
            ("+inf", Const(Peripheral.POS_INF)),
            ("--x", Neg(Neg(x))),
        ],
    )
    def test_surface_forms(self, text: str, term) -> None:
        assert parse(text) == term

    @pytest.mark.parametrize("text", ["x +", "(x", "log2 x y", "cond(x; y)", "x ** y"])
    def test_syntax_errors_carry_position(self, text: str) -> None:
        with pytest.raises(TermSyntaxError) as info:
            parse(text)
        assert 0 <= info.value.position <= len(text)
        assert info.value.text == text

    def test_reserved_word_is_not_a_variable(self) -> None:
        with pytest.raises(TermSyntaxError):
            parse("inf + 1")


@given(seed=seed_strategy, depth=st.integers(min_value=1, max_value=5))
@settings(max_examples=200)
def test_printed_terms_reparse(seed: int, depth: int) -> None:
    """Property 9: Print Round Trip.

    Feature: meadowlog, Property 9: Print Round Trip
    Printing a term and parsing the text gives back the same tree.
    """
    for term in random_terms(seed, depth, count=5):
        assert parse(to_text(term)) == term


def test_printer_uses_minimal_parentheses() -> None:
    assert to_text(parse("(x + y) + z")) == "x + y + z"
    assert to_text(parse("x + (y + z)")) == "x + (y + z)"
    assert to_text(parse("(x*y)*z")) == "x*y*z"
    assert to_text(parse("x - (y - z)")) == "x - (y - z)"
    assert to_text(Div(Const(Fraction(1)), Const(Fraction(2)))) == "1 / 2"


@given(seed=seed_strategy)
@settings(max_examples=50)
def test_substitution_removes_variables(seed: int) -> None:
    """Property 10: Substitution.

    Feature: meadowlog, Property 10: Substitution
    Substituting a closed term for every variable leaves no free variables.
    """
    (term,) = random_terms(seed, 4)
    closed = substitute(term, {name: Const(Fraction(1)) for name in free_variables(term)})
    assert free_variables(closed) == frozenset()


class TestSums:
    """Property 11: Generalized Sums.

    Feature: meadowlog, Property 11: Generalized Sums
    """

    def test_empty_sum_is_zero(self) -> None:
        assert sum_terms([]) == Const(Fraction(0))

    def test_left_nested_expansion(self) -> None:
        body = Mul(FunApp("alpha", "x"), Log2(FunApp("alpha", "x")))
        expanded = generalized_sum(body, sample_constants(3))
        assert to_text(expanded) == (
            "alpha(c1)*log2(alpha(c1)) + alpha(c2)*log2(alpha(c2))"
            " + alpha(c3)*log2(alpha(c3))"
        )

    def test_labels_must_be_distinct(self) -> None:
        with pytest.raises(TermError):
            generalized_sum(FunApp("alpha", "x"), ["c1", "c1"])
        with pytest.raises(TermError):
            generalized_sum(FunApp("alpha", "x"), [])


class TestSignature:
    def test_rejects_foreign_operator(self) -> None:
        signature = Signature(operators=frozenset({"add", "mul"}))
        signature.check(parse("x + y*z"))
        with pytest.raises(SignatureError):
            signature.check(parse("x / y"))

    def test_rejects_infinity_and_optional_bottom(self) -> None:
        signature = Signature(operators=frozenset({"add"}), allow_bottom=False)
        with pytest.raises(IllegalLiteralError):
            signature.check(parse("x + bot"))
        with pytest.raises(IllegalLiteralError):
            Signature(operators=frozenset({"add"})).check(parse("x + +inf"))

    def test_function_variables_and_labels(self) -> None:
        signature = Signature(
            operators=frozenset({"add"}), function_variables=frozenset({"alpha"}), sample_count=2
        )
        signature.check(parse("alpha(c1) + alpha(c2)"))
        with pytest.raises(SignatureError):
            signature.check(parse("alpha(c3)"))

    def test_unknown_operator_name(self) -> None:
        with pytest.raises(SignatureError):
            Signature(operators=frozenset({"pow"}))

    def test_negative_literal_rejected(self) -> None:
        with pytest.raises(TermError):
            Const(Fraction(-1))
