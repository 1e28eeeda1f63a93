"""Term commands for the meadowlog CLI: eval and flatten."""

import logging
from typing import Optional

import typer

from meadowlog.cli.app import emit, state
from meadowlog.cli.error_handlers import display_unexpected_error, handle_meadow_error
from meadowlog.cli.options import (
    CARRIER_OPTION,
    MODE_OPTION,
    check_binding_values,
    parse_bindings,
    resolve_carrier,
    resolve_mode,
)
from meadowlog.core.values import Carrier, Mode, format_value
from meadowlog.engine.evaluator import Environment, evaluate
from meadowlog.flatten.flattener import flatten
from meadowlog.terms.grammar import parse
from meadowlog.terms.printer import to_text
from meadowlog.utils.errors import MeadowError

logger = logging.getLogger(__name__)


def eval_command(
    term: str = typer.Argument(..., help="Term to evaluate, e.g. 'x / (x - 1)'."),
    bindings: Optional[list[str]] = typer.Argument(
        None, help="Bindings such as x=1/2 or alpha(c1)=1/4."
    ),
    mode: Optional[Mode] = MODE_OPTION,
    carrier: Optional[Carrier] = CARRIER_OPTION,
) -> None:
    """Evaluate a term.

    Values are integers, rationals a/b, decimals, bot, +inf and -inf.
    Division by zero and log2 of a non-positive number give bot.

    [dim]Examples:[/dim]
      meadowlog eval '1/0'
      meadowlog eval 'x |*| log2(x)' x=0
      meadowlog eval --mode signed 'log2(0)'
    """
    variables, functions = parse_bindings(bindings or [])
    mode = resolve_mode(mode)
    carrier = resolve_carrier(carrier)

    try:
        parsed = parse(term)
        check_binding_values(
            [*variables.values(), *(v for t in functions.values() for v in t.values())], mode
        )
        env = Environment(variables=variables, functions=functions)
        value = evaluate(parsed, env, mode, carrier)
        logger.debug("eval %s in %s/%s = %s", to_text(parsed), mode.value, carrier.value, value)
        emit(
            {
                "term": to_text(parsed),
                "value": format_value(value),
                "mode": mode.value,
                "carrier": carrier.value,
            },
            "value",
        )
    except MeadowError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))
    except Exception as e:
        display_unexpected_error(e, state.err_console, state.json, state.debug)
        raise typer.Exit(1)


def flatten_command(
    term: str = typer.Argument(..., help="Term to rewrite as a flat fracterm p / q."),
    mode: Optional[Mode] = MODE_OPTION,
) -> None:
    """Rewrite a term into a flat fracterm.

    The result has a single division at the root and no bot. Only the
    bot mode supports flattening.

    [dim]Example:[/dim]
      meadowlog flatten '1/x + 1/y'
    """
    mode = resolve_mode(mode)
    if mode is not Mode.BOTTOM:
        raise typer.BadParameter(
            f"flattening is defined for bot mode only, not {mode.value}", param_hint="--mode"
        )

    try:
        parsed = parse(term)
        flat = flatten(parsed)
        emit(
            {
                "term": to_text(parsed),
                "numerator": to_text(flat.numerator),
                "denominator": to_text(flat.denominator),
                "flat": flat.to_text(),
            },
            "flatten",
        )
    except MeadowError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))
    except Exception as e:
        display_unexpected_error(e, state.err_console, state.json, state.debug)
        raise typer.Exit(1)
