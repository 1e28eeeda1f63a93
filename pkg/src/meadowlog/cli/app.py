"""Main Typer application for the meadowlog CLI."""

import logging
import sys
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.text import Text

from meadowlog import __app_name__, __version__
from meadowlog.factory import create_renderer, get_config_loader


class CLIState:
    """Global state for CLI options."""

    plain: bool = False
    json: bool = False
    debug: bool = False

    @property
    def console(self) -> Console:
        """Get the console, creating one appropriate for current state."""
        if self.plain or self.json:
            return Console(force_terminal=False, no_color=True)
        return Console()

    @property
    def err_console(self) -> Console:
        """Console on stderr for diagnostics."""
        if self.plain or self.json:
            return Console(stderr=True, force_terminal=False, no_color=True)
        return Console(stderr=True)

    def is_tty(self) -> bool:
        """Check if output is a TTY."""
        return sys.stdout.isatty()

    def should_use_plain(self) -> bool:
        """Determine if plain output should be used."""
        return self.plain or self.json or not self.is_tty()

    @property
    def output_format(self) -> str:
        if self.json:
            return "json"
        if self.plain:
            return "plain"
        return get_config_loader().config.default_output.value


state = CLIState()

app = typer.Typer(
    name=__app_name__,
    help="meadowlog - total arithmetic with bot for information measures.",
    no_args_is_help=True,
    rich_markup_mode="rich",
    context_settings={"help_option_names": ["-h", "--help"]},
)


def emit(data: Any, template: str) -> None:
    """Render ``data`` with the renderer for the current output format and print it."""
    console = state.console
    renderer = create_renderer(state.output_format, console)
    rendered = renderer.render(data, template)
    if renderer.supports_rich():
        console.print(Text.from_ansi(rendered), soft_wrap=True)
    else:
        console.print(rendered, soft_wrap=True, markup=False, highlight=False)


def enable_debug_logging() -> None:
    """Send meadowlog log records at DEBUG level to stderr."""
    logger = logging.getLogger(__app_name__)
    logger.setLevel(logging.DEBUG)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=Console(stderr=True), show_path=False)
        handler.setLevel(logging.DEBUG)
        logger.addHandler(handler)


def version_callback(value: bool) -> None:
    """Display version and exit."""
    if value:
        typer.echo(f"{__app_name__} v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "-v",
        "--version",
        help="Show version and exit.",
        callback=version_callback,
        is_eager=True,
    ),
    plain: bool = typer.Option(
        False,
        "--plain",
        help="Disable Rich formatting, output plain text.",
    ),
    json_output: bool = typer.Option(
        False,
        "--json",
        help="Output results as JSON.",
    ),
    debug: bool = typer.Option(
        False,
        "--debug",
        help="Log evaluation and suite progress to stderr.",
    ),
) -> None:
    """meadowlog - total arithmetic for information measures.

    Evaluate and flatten terms over common meadows with bot, compute
    entropy and divergences of probability mass functions, and run the
    identity suites.
    """
    state.plain = plain
    state.json = json_output
    state.debug = debug or get_config_loader().config.debug_mode

    # Auto-detect non-TTY and switch to plain
    if not state.is_tty() and not json_output:
        state.plain = True

    if state.debug:
        enable_debug_logging()


# Import and register subcommand groups
from meadowlog.cli.check_commands import bayes_command, check_command  # noqa: E402
from meadowlog.cli.config_commands import config_app  # noqa: E402
from meadowlog.cli.measure_commands import (  # noqa: E402
    crossentropy_command,
    entropy_command,
    js_command,
    kl_command,
)
from meadowlog.cli.term_commands import eval_command, flatten_command  # noqa: E402

app.add_typer(config_app, name="config")

app.command("eval")(eval_command)
app.command("flatten")(flatten_command)
app.command("entropy")(entropy_command)
app.command("crossentropy")(crossentropy_command)
app.command("kl")(kl_command)
app.command("js")(js_command)
app.command("bayes")(bayes_command)
app.command("check")(check_command)
