"""Options and helpers shared by the meadowlog commands."""

import re
from typing import Optional

import typer

from meadowlog.core.values import Carrier, MeadowValue, Mode, Peripheral, parse_value
from meadowlog.factory import get_config_loader
from meadowlog.utils.errors import IllegalValueError

MODE_OPTION = typer.Option(
    None,
    "--mode",
    "-m",
    case_sensitive=False,
    help="Semantic mode: bot, signed or suppes. Defaults to the configured mode.",
)
CARRIER_OPTION = typer.Option(
    None,
    "--carrier",
    "-c",
    case_sensitive=False,
    help="Number backend: exact or approx. Defaults to the configured carrier.",
)

_BINDING = re.compile(
    r"^\s*(?P<name>[A-Za-z_]\w*)\s*(?:\(\s*(?P<label>[A-Za-z_]\w*)\s*\))?\s*=\s*(?P<value>.+?)\s*$"
)


def resolve_mode(mode: Optional[Mode]) -> Mode:
    return mode if mode is not None else get_config_loader().config.default_mode


def resolve_carrier(carrier: Optional[Carrier]) -> Carrier:
    return carrier if carrier is not None else get_config_loader().config.default_carrier


def parse_bindings(
    bindings: list[str],
) -> tuple[dict[str, MeadowValue], dict[str, dict[str, MeadowValue]]]:
    """Split ``x=1/2`` and ``alpha(c1)=1/4`` arguments into variable and function tables.

    Raises:
        typer.BadParameter: If an argument is not a binding or its value
            does not parse.
    """
    variables: dict[str, MeadowValue] = {}
    functions: dict[str, dict[str, MeadowValue]] = {}
    for binding in bindings:
        match = _BINDING.match(binding)
        if match is None:
            raise typer.BadParameter(
                f"'{binding}' is not of the form name=value or f(c)=value",
                param_hint="BINDINGS",
            )
        try:
            value = parse_value(match["value"])
        except ValueError as e:
            raise typer.BadParameter(str(e), param_hint="BINDINGS") from e
        if match["label"] is None:
            variables[match["name"]] = value
        else:
            functions.setdefault(match["name"], {})[match["label"]] = value
    return variables, functions


def check_binding_values(values: list[MeadowValue], mode: Mode) -> None:
    """Reject bound peripheral values that ``mode`` does not know.

    Raises:
        IllegalValueError: For ``bot`` in suppes mode or an infinity outside
            signed mode.
    """
    for value in values:
        if not isinstance(value, Peripheral):
            continue
        if mode is Mode.SUPPES_ONO or (mode is Mode.BOTTOM and value is not Peripheral.BOTTOM):
            raise IllegalValueError(value.value, mode.value)
