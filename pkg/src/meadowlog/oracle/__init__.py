"""Grid equivalence checks, random terms and the named identity suites."""

from meadowlog.oracle.grid import (
    DEFAULT_GRID,
    DEFAULT_TOLERANCE,
    SIGNED_GRID,
    Counterexample,
    Expectation,
    Grid,
    Verdict,
    equiv,
    values_agree,
)
from meadowlog.oracle.random_terms import random_terms
from meadowlog.oracle.suites import (
    ALL_SUITES,
    SUITE_NAMES,
    SUITES,
    SuiteSettings,
    run_suite,
)

__all__ = [
    "ALL_SUITES",
    "DEFAULT_GRID",
    "DEFAULT_TOLERANCE",
    "SIGNED_GRID",
    "SUITES",
    "SUITE_NAMES",
    "Counterexample",
    "Expectation",
    "Grid",
    "SuiteSettings",
    "Verdict",
    "equiv",
    "random_terms",
    "run_suite",
    "values_agree",
]
