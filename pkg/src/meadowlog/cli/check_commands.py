"""Checking commands for the meadowlog CLI: bayes and check.

Both exit with code 1 when a check fails, so they can gate a CI job.
"""

import dataclasses
import logging
from pathlib import Path
from typing import Optional

import typer

from meadowlog.cli.app import emit, state
from meadowlog.cli.error_handlers import display_unexpected_error, handle_meadow_error
from meadowlog.events.space import EventSpace, bayes_check
from meadowlog.factory import get_config_loader
from meadowlog.measures.loader import load_pmf
from meadowlog.oracle.suites import ALL_SUITES, SuiteSettings, run_suite
from meadowlog.utils.errors import MeadowError

logger = logging.getLogger(__name__)

FAILED_EXIT_CODE = 1


def bayes_command(
    p: Path = typer.Argument(..., help="TSV file with label<TAB>weight lines."),
) -> None:
    """Check the guarded Bayes-Price identity on every pair of events.

    Pairs with P(A) = 0 < P(B) are listed separately: there P(A|B) is 0
    while the right-hand side divides by zero.
    Spaces larger than the configured bayes_max_outcomes are rejected.
    """
    try:
        pmf = load_pmf(p)
        space = EventSpace(pmf)
        report = bayes_check(space, get_config_loader().config.bayes_max_outcomes)
        logger.debug(
            "bayes: %d pairs, %d violations, %d unguarded",
            report.checked,
            len(report.violations),
            len(report.unguarded),
        )
        emit(
            {
                "space": str(pmf),
                "checked": report.checked,
                "holds": report.holds,
                "violations": [case.to_dict(space) for case in report.violations],
                "unguarded": [case.to_dict(space) for case in report.unguarded],
            },
            "bayes",
        )
    except MeadowError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))
    except Exception as e:
        display_unexpected_error(e, state.err_console, state.json, state.debug)
        raise typer.Exit(1)

    if not report.holds:
        raise typer.Exit(FAILED_EXIT_CODE)


def check_command(
    suite: str = typer.Argument(ALL_SUITES, help="Suite to run, or 'all'."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the random terms."),
    count: Optional[int] = typer.Option(
        None, "--count", min=1, help="Number of random terms to flatten."
    ),
    depth: Optional[int] = typer.Option(
        None, "--depth", min=1, max=6, help="Depth bound of random terms."
    ),
) -> None:
    """Run identity suites and report every verdict.

    [dim]Suites:[/dim] absorption, conditional, interdefinability, logcase,
    flatten_rules, flatten, signed, measures, builders, bayes, suppes

    [dim]Example:[/dim]
      meadowlog check flatten --seed 7 --count 200
    """
    settings = SuiteSettings.from_config(get_config_loader().config)
    overrides = {"seed": seed, "term_count": count, "max_depth": depth}
    settings = dataclasses.replace(
        settings, **{k: v for k, v in overrides.items() if v is not None}
    )

    try:
        verdicts = run_suite(suite, settings)
        emit([v.to_dict() for v in verdicts], "verdicts")
    except MeadowError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))
    except Exception as e:
        display_unexpected_error(e, state.err_console, state.json, state.debug)
        raise typer.Exit(1)

    if not all(v.passed for v in verdicts):
        raise typer.Exit(FAILED_EXIT_CODE)
