"""Rich-based renderer for meadowlog.

Terms are printed without soft wrapping; long flattened terms stay on one
logical line so they can be copied back into ``eval``.
"""

from typing import Any

from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from meadowlog.render.plain_renderer import event_text, verdict_detail

_PERIPHERAL_STYLES = {"bot": "bold red", "+inf": "bold magenta", "-inf": "bold magenta"}


def _value_text(value: str) -> Text:
    return Text(value, style=_PERIPHERAL_STYLES.get(value, "bold green"))


class RichRenderer:
    """Rich-based renderer for terminal output."""

    def __init__(self, console: Console | None = None) -> None:
        self._console = console or Console()

    @property
    def console(self) -> Console:
        """Get the Rich Console instance."""
        return self._console

    def render(self, data: Any, template: str) -> str:
        if template == "value":
            renderable = self._render_value(data)
        elif template == "measure":
            renderable = self._render_measure(data)
        elif template == "flatten":
            renderable = self._render_flatten(data)
        elif template == "verdicts":
            renderable = self._render_verdicts(data)
        elif template == "bayes":
            renderable = self._render_bayes(data)
        else:
            renderable = self._render_default(data)

        with self._console.capture() as capture:
            self._console.print(renderable, soft_wrap=True)
        return capture.get().rstrip("\n")

    def supports_rich(self) -> bool:
        return True

    def _fields(self) -> Table:
        table = Table(show_header=False, box=None, padding=(0, 1))
        table.add_column("Field", style="cyan", no_wrap=True)
        table.add_column("Value", overflow="fold")
        return table

    def _render_value(self, data: dict[str, Any]) -> Table:
        table = self._fields()
        table.add_row("Term", Text(data["term"], style="yellow"))
        table.add_row("Value", _value_text(data["value"]))
        table.add_row("Mode", Text(f"{data['mode']} / {data['carrier']}", style="dim"))
        return table

    def _render_measure(self, data: dict[str, Any]) -> Panel:
        table = self._fields()
        if data.get("term"):
            table.add_row("Term", Text(data["term"], style="yellow"))
        table.add_row("Value", _value_text(data["value"]))
        table.add_row("Variant", Text(data["variant"], style="magenta"))
        table.add_row("Mode", Text(f"{data['mode']} / {data['carrier']}", style="dim"))
        return Panel(table, title=f"[bold]{data['measure']}[/bold]", border_style="cyan")

    def _render_flatten(self, data: dict[str, Any]) -> Table:
        table = self._fields()
        table.add_row("Term", Text(data["term"], style="yellow"))
        table.add_row("Numerator", Text(data["numerator"]))
        table.add_row("Denominator", Text(data["denominator"]))
        table.add_row("Flat", Text(data["flat"], style="bold green"))
        return table

    def _render_verdicts(self, verdicts: list[dict[str, Any]]) -> Table:
        failed = sum(1 for v in verdicts if not v["passed"])
        table = Table(
            title=f"{len(verdicts)} checks, {failed} failed",
            show_header=True,
            header_style="bold",
        )
        table.add_column("", width=4)
        table.add_column("Suite", style="cyan", no_wrap=True)
        table.add_column("Check")
        table.add_column("Cases", justify="right", style="dim")
        table.add_column("Detail", overflow="fold")
        for verdict in verdicts:
            status = (
                Text("PASS", style="green")
                if verdict["passed"]
                else Text("FAIL", style="bold red")
            )
            table.add_row(
                status,
                verdict["suite"] or "",
                verdict["name"],
                str(verdict["checked"]),
                verdict_detail(verdict),
            )
        return table

    def _render_bayes(self, report: dict[str, Any]) -> Panel:
        table = Table(show_header=True, header_style="bold", box=None)
        table.add_column("A")
        table.add_column("B")
        table.add_column("P(A)", justify="right")
        table.add_column("P(B)", justify="right")
        table.add_column("P(A|B)", justify="right")
        table.add_column("Bayes", justify="right")
        for key, style in (("violations", "bold red"), ("unguarded", "yellow")):
            for case in report[key]:
                table.add_row(
                    event_text(case["a"]),
                    event_text(case["b"]),
                    case["p_a"],
                    case["p_b"],
                    _value_text(case["lhs"]),
                    _value_text(case["rhs"]),
                    style=style,
                )
        status = (
            Text("guarded identity holds", style="bold green")
            if report["holds"]
            else Text("guarded identity FAILS", style="bold red")
        )
        header = Text.assemble(status, f"  ({report['checked']} event pairs)\n", report["space"])
        body = Table.grid()
        body.add_row(header)
        if report["violations"] or report["unguarded"]:
            body.add_row(table)
        return Panel(body, title="[bold]Bayes-Price[/bold]", border_style="cyan")

    def _render_default(self, data: Any) -> Any:
        if isinstance(data, dict):
            table = self._fields()
            for key, value in data.items():
                table.add_row(str(key), str(value))
            return table
        return Text(str(data))
