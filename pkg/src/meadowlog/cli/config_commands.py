"""Config subcommands for the meadowlog CLI.

View and modify the defaults used by the other commands: output format,
mode, carrier, comparison tolerance and the suite sizes.
"""

import typer
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from meadowlog.cli.app import state
from meadowlog.cli.error_handlers import handle_meadow_error
from meadowlog.config.loader import CONFIG_KEYS
from meadowlog.factory import get_config_loader
from meadowlog.render.json_renderer import JSONRenderer
from meadowlog.utils.errors import ConfigError
from meadowlog.utils.suggestions import get_config_key_suggestions


def _print_json(console: Console, data: dict) -> None:
    rendered = JSONRenderer().render(data, "config")
    console.print(rendered, markup=False, highlight=False, soft_wrap=True)


config_app = typer.Typer(
    name="config",
    help="View and modify CLI configuration settings.",
    no_args_is_help=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)


@config_app.command("show")
def show() -> None:
    """Display current configuration settings.

    Shows all configuration values including defaults, file settings,
    and environment variable overrides.
    """
    console = state.console
    loader = get_config_loader()

    config_dict = loader.show()

    if state.json:
        _print_json(console, config_dict)
    elif state.should_use_plain():
        lines = [f"{key}: {value}" for key, value in config_dict.items()]
        lines.extend(["", f"Config file: {loader.config_path}"])
        console.print("\n".join(lines), markup=False, highlight=False)
    else:
        table = Table(show_header=True, title="meadowlog configuration")
        table.add_column("Setting", style="cyan")
        table.add_column("Value", style="green")
        for key, value in config_dict.items():
            table.add_row(key, str(value))

        console.print(table)
        console.print(f"\n[dim]Config file: {loader.config_path}[/dim]")


@config_app.command("set")
def set_config(
    key: str = typer.Argument(..., help="Configuration key to set (e.g., 'default_mode')."),
    value: str = typer.Argument(..., help="Value to set."),
) -> None:
    """Set a configuration value.

    Modifies the configuration file at ~/.meadowlog/config.yaml.

    Valid keys:
    - default_output: Output format (rich, plain, json)
    - default_mode: Semantic mode (bot, signed, suppes)
    - default_carrier: Number backend (exact, approx)
    - tolerance: Relative tolerance of approximate comparisons
    - seed, term_count, max_depth: Random terms of the flatten suite
    - max_outcomes: Largest event space of the bayes suite
    - bayes_max_outcomes: Largest pmf the bayes command checks
    - builder_max_n: Largest sample count of the builders suite
    - debug_mode: Enable debug logging (true/false)
    """
    console = state.console
    loader = get_config_loader()

    try:
        loader.set(key, value)
    except ConfigError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))

    if state.json:
        result = {"success": True, "key": key, "value": loader.get(key)}
        _print_json(console, result)
    elif state.should_use_plain():
        console.print(f"Set {key} = {loader.get(key)}", markup=False, highlight=False)
    else:
        console.print(
            Panel(
                f"[green]✓[/green] Set [cyan]{key}[/cyan] = "
                f"[yellow]{escape(str(loader.get(key)))}[/yellow]",
                title="Configuration Updated",
                border_style="green",
            )
        )


@config_app.command("get")
def get_config(
    key: str = typer.Argument(..., help="Configuration key to get."),
) -> None:
    """Get a specific configuration value."""
    console = state.console
    loader = get_config_loader()

    try:
        value = loader.get(key)
    except KeyError:
        close = get_config_key_suggestions(key, list(CONFIG_KEYS))
        hint = f" Did you mean: {', '.join(close)}?" if close else ""
        error = ConfigError(f"Configuration key not found: {key}.{hint}")
        raise typer.Exit(handle_meadow_error(error, state.err_console, state.json))

    if state.json:
        _print_json(console, {"key": key, "value": value})
    elif state.should_use_plain():
        console.print(f"{key}: {value}", markup=False, highlight=False)
    else:
        console.print(f"[cyan]{key}[/cyan]: [green]{escape(str(value))}[/green]")


@config_app.command("path")
def config_path() -> None:
    """Display the configuration file path."""
    console = state.console
    loader = get_config_loader()

    path = str(loader.config_path)
    exists = loader.config_path.exists()

    if state.json:
        _print_json(console, {"path": path, "exists": exists})
    elif state.should_use_plain():
        status = "exists" if exists else "not found"
        console.print(f"Config path: {path} ({status})", markup=False, highlight=False)
    else:
        status_text = "[green]exists[/green]" if exists else "[yellow]not found[/yellow]"
        console.print(f"Config path: [cyan]{escape(path)}[/cyan] ({status_text})")
