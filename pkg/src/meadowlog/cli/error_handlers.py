"""Error handlers for the meadowlog CLI.

Library errors are shown as Rich panels (or JSON objects) on the error
console and end the command with exit code 2. Anything unexpected is
logged with its traceback to the debug log file.
"""

import json
import logging
import traceback
from datetime import datetime
from pathlib import Path

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel

from meadowlog.utils.errors import (
    ConfigError,
    MeadowError,
    PmfError,
    TermSyntaxError,
    UnknownSuiteError,
)

DEBUG_LOG_DIR = Path.home() / ".meadowlog" / "logs"
DEBUG_LOG_FILE = DEBUG_LOG_DIR / "error.log"

USAGE_EXIT_CODE = 2


def setup_debug_logging() -> logging.Logger:
    """Set up debug file logging for unexpected errors.

    Returns:
        Configured logger instance.
    """
    DEBUG_LOG_DIR.mkdir(parents=True, exist_ok=True)

    logger = logging.getLogger("meadowlog.debug")
    logger.setLevel(logging.DEBUG)

    if not any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        handler = logging.FileHandler(DEBUG_LOG_FILE, mode="a", encoding="utf-8")
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
        logger.addHandler(handler)

    return logger


def log_unexpected_error(error: Exception, context: str = "") -> None:
    """Log an unexpected error with its traceback to the debug file."""
    try:
        logger = setup_debug_logging()
    except OSError:
        return

    logger.error("Unexpected error at %s", datetime.now().isoformat())
    if context:
        logger.error("Context: %s", context)
    logger.error("%s: %s", type(error).__name__, error)
    logger.error("Traceback:\n%s", traceback.format_exc())
    logger.error("-" * 80)


def _print_json(console: Console, data: dict) -> None:
    console.print(json.dumps(data, indent=2), markup=False, highlight=False, soft_wrap=True)


def display_syntax_error(
    error: TermSyntaxError,
    console: Console,
    use_json: bool = False,
) -> None:
    """Show the term with a caret under the offending position."""
    if use_json:
        _print_json(
            console,
            {
                "error": "TermSyntaxError",
                "message": str(error),
                "text": error.text,
                "position": error.position,
                "expected": error.expected,
            },
        )
        return

    expected = ", ".join(error.expected) if error.expected else "end of input"
    pointer = " " * error.position + "^"
    console.print(
        Panel(
            f"[red]✖[/red] Cannot parse term at position {error.position}\n\n"
            f"  {escape(error.text)}\n  [bold red]{pointer}[/bold red]\n\n"
            f"[dim]Expected:[/dim] {escape(expected)}",
            title="Syntax Error",
            border_style="red",
        )
    )


def display_unknown_suite_error(
    error: UnknownSuiteError,
    console: Console,
    use_json: bool = False,
) -> None:
    """Show similar suite names for a mistyped suite."""
    if use_json:
        _print_json(
            console,
            {
                "error": "UnknownSuiteError",
                "message": str(error),
                "suite": error.name,
                "suggestions": error.suggestions,
            },
        )
        return

    suggestions_text = "\n".join(f"  • {s}" for s in error.suggestions[:5])
    if not suggestions_text:
        suggestions_text = "  (no similar suites found)"
    console.print(
        Panel(
            f"[red]✖[/red] Suite '[bold]{escape(error.name)}[/bold]' not found\n\n"
            f"[dim]Did you mean:[/dim]\n{suggestions_text}\n\n"
            f"[dim]Try:[/dim] meadowlog check all",
            title="Not Found",
            border_style="red",
        )
    )


def display_pmf_error(
    error: PmfError,
    console: Console,
    use_json: bool = False,
) -> None:
    """List every problem found in a pmf file."""
    if use_json:
        _print_json(
            console,
            {
                "error": "PmfError",
                "message": str(error),
                "source": error.source,
                "errors": error.errors,
            },
        )
        return

    errors_text = "\n".join(f"  • {escape(e)}" for e in error.errors)
    console.print(
        Panel(
            f"[red]✖[/red] Invalid probability mass function\n\n"
            f"[dim]Source:[/dim] {escape(error.source)}\n\n{errors_text}",
            title="Pmf Error",
            border_style="red",
        )
    )


def display_config_error(
    error: ConfigError,
    console: Console,
    use_json: bool = False,
) -> None:
    if use_json:
        _print_json(console, {"error": "ConfigError", "message": str(error)})
        return

    console.print(
        Panel(
            f"[red]✖[/red] {escape(str(error))}\n\n[dim]Try:[/dim] meadowlog config show",
            title="Configuration Error",
            border_style="red",
        )
    )


def display_meadow_error(
    error: MeadowError,
    console: Console,
    use_json: bool = False,
) -> None:
    """Generic panel for library errors without a dedicated display."""
    if use_json:
        _print_json(console, {"error": type(error).__name__, "message": str(error)})
        return

    console.print(
        Panel(
            f"[red]✖[/red] {escape(str(error))}",
            title=type(error).__name__,
            border_style="red",
        )
    )


def display_unexpected_error(
    error: Exception,
    console: Console,
    use_json: bool = False,
    debug: bool = False,
) -> None:
    """Display user-friendly message for unexpected errors.

    Logs the full stack trace to the debug file and shows a short message.
    """
    log_unexpected_error(error, context="CLI execution")

    if use_json:
        error_data = {
            "error": "UnexpectedError",
            "message": str(error),
            "type": type(error).__name__,
            "debug_log": str(DEBUG_LOG_FILE),
        }
        if debug:
            error_data["traceback"] = traceback.format_exc()
        _print_json(console, error_data)
        return

    message = (
        f"[red]✖[/red] An unexpected error occurred\n\n"
        f"[dim]Error:[/dim] {type(error).__name__}: {escape(str(error))}\n\n"
        f"[dim]Debug log:[/dim] {DEBUG_LOG_FILE}"
    )
    if debug:
        message += f"\n\n[dim]Traceback:[/dim]\n{escape(traceback.format_exc())}"
    console.print(Panel(message, title="Unexpected Error", border_style="red"))


def handle_meadow_error(
    error: MeadowError,
    console: Console,
    use_json: bool = False,
) -> int:
    """Display any MeadowError and return the exit code for it."""
    if isinstance(error, TermSyntaxError):
        display_syntax_error(error, console, use_json)
    elif isinstance(error, UnknownSuiteError):
        display_unknown_suite_error(error, console, use_json)
    elif isinstance(error, PmfError):
        display_pmf_error(error, console, use_json)
    elif isinstance(error, ConfigError):
        display_config_error(error, console, use_json)
    else:
        display_meadow_error(error, console, use_json)
    return USAGE_EXIT_CODE
