"""Plain text renderer for meadowlog.

Produces output without ANSI escape sequences. Values print on their own
line so that the output of ``eval`` and ``flatten`` can be piped into
another invocation.
"""

from typing import Any


def counterexample_text(counterexample: dict[str, Any] | None) -> str:
    """``lhs vs rhs at x=.., y=..`` for a serialized counterexample."""
    if not counterexample:
        return ""
    values = f"{counterexample['lhs']} vs {counterexample['rhs']}"
    where = ", ".join(f"{k}={v}" for k, v in counterexample["assignment"].items())
    return f"{values} at {where}" if where else values


def verdict_detail(verdict: dict[str, Any]) -> str:
    """Counterexample, error and note of a serialized verdict, joined."""
    parts = [counterexample_text(verdict.get("counterexample"))]
    parts += [verdict.get("error") or "", verdict.get("note") or ""]
    return "; ".join(p for p in parts if p)


def event_text(labels: list[str]) -> str:
    return "{" + ", ".join(labels) + "}"


class PlainRenderer:
    """Plain text renderer for terminal output."""

    def render(self, data: Any, template: str) -> str:
        if template in ("value", "measure"):
            return self._render_value(data)
        elif template == "flatten":
            return data["flat"]
        elif template == "verdicts":
            return self._render_verdicts(data)
        elif template == "bayes":
            return self._render_bayes(data)
        else:
            return self._render_default(data)

    def supports_rich(self) -> bool:
        return False

    def _render_value(self, data: dict[str, Any]) -> str:
        lines = []
        if data.get("term") and data.get("measure"):
            lines.append(data["term"])
        lines.append(data["value"])
        return "\n".join(lines)

    def _render_verdicts(self, verdicts: list[dict[str, Any]]) -> str:
        lines = []
        for verdict in verdicts:
            status = "PASS" if verdict["passed"] else "FAIL"
            line = f"{status}  [{verdict['suite']}] {verdict['name']}"
            line += f" ({verdict['checked']} checked)"
            detail = verdict_detail(verdict)
            if detail:
                line += f": {detail}"
            lines.append(line)
        failed = sum(1 for v in verdicts if not v["passed"])
        lines.append(f"{len(verdicts)} checks, {failed} failed")
        return "\n".join(lines)

    def _render_bayes(self, report: dict[str, Any]) -> str:
        status = "holds" if report["holds"] else "FAILS"
        lines = [
            f"space: {report['space']}",
            f"guarded Bayes-Price identity {status} ({report['checked']} event pairs)",
        ]
        for title, key in (("violations", "violations"), ("guard-failing pairs", "unguarded")):
            cases = report[key]
            if not cases:
                continue
            lines.append(f"{title}:")
            for case in cases:
                lines.append(
                    f"  A={event_text(case['a'])} B={event_text(case['b'])}: "
                    f"P(A)={case['p_a']} P(B)={case['p_b']} lhs={case['lhs']} rhs={case['rhs']}"
                )
        return "\n".join(lines)

    def _render_default(self, data: Any) -> str:
        if isinstance(data, dict):
            return "\n".join(f"{key}: {value}" for key, value in data.items())
        if isinstance(data, list):
            return "\n".join(str(item) for item in data)
        return str(data)
