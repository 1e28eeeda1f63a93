"""Property tests for the renderers.

Feature: meadowlog, Properties 37-38: Output Formats
"""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from rich.console import Console

from meadowlog.core.values import BOT
from meadowlog.factory import create_renderer
from meadowlog.oracle import run_suite
from meadowlog.render import JSONRenderer, PlainRenderer, RichRenderer
from tests.conftest import signed_value_strategy

VALUE = {"term": "1/0", "value": "bot", "mode": "bot", "carrier": "approx"}
MEASURE = {
    "measure": "entropy",
    "value": "1",
    "variant": "seqmul",
    "mode": "bot",
    "carrier": "approx",
    "term": "-(alpha(c1) |*| log2(alpha(c1)))",
}
FLAT = {
    "term": "1/x + 1/y",
    "numerator": "1*y + 1*x",
    "denominator": "x*y",
    "flat": "(1*y + 1*x) / (x*y)",
}
BAYES = {
    "space": "a=1/2, b=1/2, c=0",
    "checked": 64,
    "holds": True,
    "violations": [],
    "unguarded": [
        {"a": ["c"], "b": ["a"], "p_a": "0", "p_b": "1/2", "lhs": "0", "rhs": "bot"},
    ],
}


@given(value=signed_value_strategy)
@settings(max_examples=100)
def test_json_output_is_valid(value) -> None:
    """Property 37: JSON Output Validity.

    Feature: meadowlog, Property 37: JSON Output Validity
    Meadow values serialize to their textual forms inside valid JSON.
    """
    output = JSONRenderer().render({"value": value, "items": [value]}, "value")
    parsed = json.loads(output)
    assert parsed["value"] == parsed["items"][0]
    assert isinstance(parsed["value"], str)


def test_json_verdicts() -> None:
    verdicts = run_suite("logcase")
    parsed = json.loads(JSONRenderer().render(verdicts, "verdicts"))
    assert parsed[0]["suite"] == "logcase"
    assert parsed[0]["passed"] is True
    assert json.loads(JSONRenderer().render(BOT, "value")) == "bot"
    assert json.loads(JSONRenderer().render(Fraction(3, 4), "value")) == "3/4"


class TestPlainRenderer:
    """Property 38: Plain Output.

    Feature: meadowlog, Property 38: Plain Output
    Plain output has no ANSI escapes and prints values on their own line.
    """

    def test_value_alone(self) -> None:
        assert PlainRenderer().render(VALUE, "value") == "bot"

    def test_measure_with_term(self) -> None:
        output = PlainRenderer().render(MEASURE, "measure")
        assert output.splitlines() == [MEASURE["term"], "1"]

    def test_flatten(self) -> None:
        assert PlainRenderer().render(FLAT, "flatten") == FLAT["flat"]

    def test_verdicts(self) -> None:
        data = [
            {
                "suite": "demo",
                "name": "x/x = 1",
                "passed": False,
                "checked": 1,
                "counterexample": {"assignment": {"x": "bot"}, "lhs": "bot", "rhs": "1"},
                "error": None,
                "note": None,
            }
        ]
        output = PlainRenderer().render(data, "verdicts")
        assert output.splitlines() == [
            "FAIL  [demo] x/x = 1 (1 checked): bot vs 1 at x=bot",
            "1 checks, 1 failed",
        ]

    def test_bayes(self) -> None:
        lines = PlainRenderer().render(BAYES, "bayes").splitlines()
        assert lines[0] == "space: a=1/2, b=1/2, c=0"
        assert lines[1] == "guarded Bayes-Price identity holds (64 event pairs)"
        assert lines[2] == "guard-failing pairs:"
        assert "rhs=bot" in lines[3]

    @pytest.mark.parametrize("template", ["value", "measure", "flatten", "bayes"])
    def test_no_ansi(self, template: str) -> None:
        data = {"value": VALUE, "measure": MEASURE, "flatten": FLAT, "bayes": BAYES}[template]
        assert "\x1b[" not in PlainRenderer().render(data, template)


class TestRichRenderer:
    @pytest.mark.parametrize(
        "template, data, needle",
        [
            ("value", VALUE, "bot"),
            ("measure", MEASURE, "entropy"),
            ("flatten", FLAT, "(1*y + 1*x) / (x*y)"),
            ("bayes", BAYES, "Bayes-Price"),
        ],
    )
    def test_templates(self, template: str, data, needle: str) -> None:
        console = Console(width=120, no_color=True, force_terminal=False)
        output = RichRenderer(console).render(data, template)
        assert needle in output

    def test_verdict_table(self) -> None:
        console = Console(width=160, no_color=True, force_terminal=False)
        verdicts = [v.to_dict() for v in run_suite("logcase")]
        output = RichRenderer(console).render(verdicts, "verdicts")
        assert "PASS" in output
        assert "1 checks, 0 failed" in output


@pytest.mark.parametrize(
    "output_format, renderer_type",
    [("rich", RichRenderer), ("PLAIN", PlainRenderer), ("json", JSONRenderer)],
)
def test_factory_creates_renderers(output_format: str, renderer_type: type) -> None:
    assert isinstance(create_renderer(output_format), renderer_type)


def test_factory_rejects_unknown_format() -> None:
    with pytest.raises(ValueError):
        create_renderer("html")


@given(text=st.sampled_from(["+inf", "-inf", "bot", "3/4"]))
def test_plain_value_is_verbatim(text: str) -> None:
    data = dict(VALUE, value=text)
    assert PlainRenderer().render(data, "value") == text
