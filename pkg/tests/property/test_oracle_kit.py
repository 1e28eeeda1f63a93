"""Property tests for the equivalence oracle, random terms and suites.

Feature: meadowlog, Properties 27-30: Oracle Kit
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meadowlog.config.schema import MeadowConfig
from meadowlog.core.values import BOT, Mode
from meadowlog.engine import Environment
from meadowlog.oracle import (
    ALL_SUITES,
    DEFAULT_GRID,
    SIGNED_GRID,
    SUITE_NAMES,
    SUITES,
    Expectation,
    Grid,
    SuiteSettings,
    equiv,
    random_terms,
    run_suite,
    values_agree,
)
from meadowlog.terms import FULL_SIGNATURE, parse
from meadowlog.terms.ast import LEAF_TYPES, depth
from meadowlog.utils.errors import UnknownSuiteError
from tests.conftest import RATIONAL_SIGNATURE, seed_strategy

SMALL = SuiteSettings(term_count=40, max_depth=3, max_outcomes=2, builder_max_n=2)


class TestEquiv:
    def test_identity_holds_on_whole_grid(self) -> None:
        verdict = equiv(parse("x + y"), parse("y + x"))
        assert verdict.passed
        assert verdict.checked == len(DEFAULT_GRID.values) ** 2

    def test_failing_identity_reports_counterexample(self) -> None:
        verdict = equiv(parse("x/x"), parse("1"))
        assert not verdict.passed
        assert verdict.counterexample is not None
        assert verdict.counterexample.lhs is BOT

    def test_must_differ_passes_with_witness(self) -> None:
        verdict = equiv(
            parse("x*(y + z)"),
            parse("x*y + x*z"),
            grid=SIGNED_GRID,
            mode=Mode.SIGNED,
            expect=Expectation.DIFFERS,
        )
        assert verdict.passed
        assert verdict.counterexample is not None

    def test_distributivity_holds_in_bottom_mode(self) -> None:
        assert equiv(parse("x*(y + z)"), parse("x*y + x*z")).passed

    def test_unenumerated_variable(self) -> None:
        with pytest.raises(ValueError):
            equiv(parse("x + y"), parse("y + x"), variables=["x"])

    def test_evaluation_error_fails_the_check(self) -> None:
        verdict = equiv(parse("alpha(c1)"), parse("0"), variables=[])
        assert not verdict.passed
        assert "alpha(c1)" in verdict.error

    def test_base_environment(self) -> None:
        env = Environment(functions={"alpha": {"c1": Fraction(1, 2)}})
        assert equiv(parse("x*alpha(c1)"), parse("x*(1/2)"), env=env).passed

    def test_inexact_logarithm_falls_back(self) -> None:
        assert equiv(parse("log2(3*x)"), parse("log2(3) + log2(x)"), variables=["x"]).passed


class TestGrid:
    def test_exhaustive_grid_needs_every_branch(self) -> None:
        with pytest.raises(ValueError):
            Grid((Fraction(1), Fraction(-1), Fraction(0)))
        assert Grid((Fraction(1),), exhaustive=False).values == (Fraction(1),)

    def test_ordinary_part(self) -> None:
        assert BOT not in DEFAULT_GRID.ordinary.values

    @pytest.mark.parametrize(
        "a, b, agree",
        [
            (BOT, BOT, True),
            (BOT, Fraction(0), False),
            (1.0, 1.0 + 1e-12, True),
            (Fraction(1, 3), Fraction(1, 3), True),
            (Fraction(1, 3), 1 / 3, True),
            (0.5, 0.6, False),
        ],
    )
    def test_values_agree(self, a, b, agree: bool) -> None:
        assert values_agree(a, b) is agree


@given(seed=seed_strategy, max_depth=st.integers(min_value=1, max_value=5))
@settings(max_examples=100)
def test_random_terms_are_reproducible(seed: int, max_depth: int) -> None:
    """Property 27: Reproducible Random Terms.

    Feature: meadowlog, Property 27: Reproducible Random Terms
    The same seed yields the same terms, within the depth bound and with an
    operator at the root from depth 2 on.
    """
    first = random_terms(seed, max_depth, count=4)
    assert first == random_terms(seed, max_depth, count=4)
    for term in first:
        assert depth(term) <= max_depth
        if max_depth >= 2:
            assert not isinstance(term, LEAF_TYPES)


@given(seed=seed_strategy)
@settings(max_examples=50)
def test_random_terms_respect_signature(seed: int) -> None:
    """Property 28: Signature Bound.

    Feature: meadowlog, Property 28: Signature Bound
    """
    for term in random_terms(seed, 4, signature=RATIONAL_SIGNATURE, count=5):
        RATIONAL_SIGNATURE.check(term)
    for term in random_terms(seed, 4, signature=FULL_SIGNATURE, count=5):
        FULL_SIGNATURE.check(term)


def test_random_terms_reject_bad_arguments() -> None:
    with pytest.raises(ValueError):
        random_terms(1, 0)
    with pytest.raises(ValueError):
        random_terms(1, 3, variables=("a", "b", "c", "d"))


@pytest.mark.parametrize("suite", list(SUITES))
def test_every_suite_passes(suite: str) -> None:
    """Property 29: Suites Pass.

    Feature: meadowlog, Property 29: Suites Pass
    Every registered suite passes with small settings and labels its verdicts.
    """
    verdicts = run_suite(suite, SMALL)
    assert verdicts
    failed = [v.to_dict() for v in verdicts if not v.passed]
    assert not failed
    assert {v.suite for v in verdicts} == {suite}


def test_must_differ_checks_are_reported() -> None:
    verdicts = run_suite("conditional", SMALL)
    differs = [v for v in verdicts if v.expectation is Expectation.DIFFERS]
    assert differs and all(v.counterexample is not None for v in differs)


def test_unknown_suite_suggests_names() -> None:
    """Property 30: Suite Suggestions.

    Feature: meadowlog, Property 30: Suite Suggestions
    """
    with pytest.raises(UnknownSuiteError) as info:
        run_suite("absorb")
    assert "absorption" in info.value.suggestions
    assert ALL_SUITES in SUITE_NAMES


def test_settings_from_config() -> None:
    config = MeadowConfig(seed=7, term_count=12, max_depth=2, tolerance=1e-6)
    suite_settings = SuiteSettings.from_config(config)
    assert (suite_settings.seed, suite_settings.term_count) == (7, 12)
    assert suite_settings.max_depth == 2
    assert suite_settings.tolerance == 1e-6


def test_verdict_serialization() -> None:
    verdict = equiv(parse("x/x"), parse("1"), name="x/x = 1")
    data = verdict.to_dict()
    assert data["name"] == "x/x = 1"
    assert data["passed"] is False
    assert data["counterexample"]["lhs"] == "bot"
    assert data["expectation"] == "holds"
