"""Rewrite rules of the fracterm flattener, written as surface-syntax equations.

Each rule states ``lhs = rhs`` for all values of its variables. Rules whose
right-hand side is a fracterm can be instantiated: substituting terms for
the variables yields a :class:`FlatFracterm`. The ``derived`` flag marks
equations that are adopted only after they pass the rule-level oracle.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

from meadowlog.core.values import Peripheral
from meadowlog.terms.ast import Const, Div, Term, free_variables, substitute, subterms
from meadowlog.terms.grammar import parse
from meadowlog.terms.printer import to_text


@dataclass(frozen=True)
class FlatFracterm:
    """``numerator / denominator`` with a single division at the root.

    Attributes:
        numerator: Division-free, bot-free term.
        denominator: Division-free, bot-free term.
    """

    numerator: Term
    denominator: Term

    def as_term(self) -> Term:
        return Div(self.numerator, self.denominator)

    def to_text(self) -> str:
        """Render as ``(<p>) / (<q>)``."""
        return f"({to_text(self.numerator)}) / ({to_text(self.denominator)})"

    def is_flat(self) -> bool:
        """True when neither part contains a division or a ``bot`` literal."""
        return is_plain(self.numerator) and is_plain(self.denominator)


def is_plain(term: Term) -> bool:
    """True for terms without divisions and without ``bot`` literals."""
    for t in subterms(term):
        if isinstance(t, Div):
            return False
        if isinstance(t, Const) and t.value is Peripheral.BOTTOM:
            return False
    return True


@dataclass(frozen=True)
class FlattenRule:
    """A named equation ``lhs = rhs``.

    Attributes:
        name: Rule name used in verdicts and by the flattener.
        lhs_text: Left-hand side in the surface syntax.
        rhs_text: Right-hand side in the surface syntax.
        derived: True for equations adopted on oracle evidence alone.
    """

    name: str
    lhs_text: str
    rhs_text: str
    derived: bool = False

    @cached_property
    def lhs(self) -> Term:
        return parse(self.lhs_text)

    @cached_property
    def rhs(self) -> Term:
        return parse(self.rhs_text)

    @property
    def variables(self) -> list[str]:
        return sorted(free_variables(self.lhs) | free_variables(self.rhs))

    def instantiate(self, **bindings: Term) -> FlatFracterm:
        """Substitute terms for the rule variables in the right-hand side.

        Raises:
            ValueError: If the right-hand side is not a fracterm.
        """
        rhs = substitute(self.rhs, bindings)
        if not isinstance(rhs, Div):
            raise ValueError(f"Rule {self.name} does not produce a fracterm")
        return FlatFracterm(rhs.left, rhs.right)

    def __str__(self) -> str:
        return f"{self.lhs_text} = {self.rhs_text}"


FLATTEN_RULES: Sequence[FlattenRule] = (
    FlattenRule("leaf", "x", "x/1"),
    FlattenRule("bottom", "bot", "1/0"),
    FlattenRule("add", "x/xq + y/yq", "(x*yq + y*xq)/(xq*yq)"),
    FlattenRule("neg", "-(x/xq)", "(-x)/xq"),
    FlattenRule("mul", "(x/xq)*(y/yq)", "(x*y)/(xq*yq)"),
    FlattenRule("div", "(x/xq)/(y/yq)", "(x*yq*yq)/(xq*y*yq)", derived=True),
    FlattenRule("mul_plain", "(x/xq)*y", "(x*y)/xq", derived=True),
    FlattenRule("div_plain", "(x/xq)/y", "x/(xq*y)", derived=True),
    FlattenRule("cond_then", "cond(x/xq; y; z)", "cond(x; y; z)/cond(xq; y; 1)"),
    FlattenRule("cond_test", "cond(x; y/yq; z)", "(cond(x; y; z)*yq)/yq"),
    FlattenRule("cond_else", "cond(x; y; z/zq)", "cond(x; y; z)/cond(1; y; zq)"),
    FlattenRule("log2", "log2(x/y)", "(log2(x*x) - log2(y*y))/(2 + 0*log2(x*y))"),
    FlattenRule("sign", "s(x/y)", "s(x)/s(y)", derived=True),
    FlattenRule("sign_squared", "s(x/y)*s(x/y)", "(s(x)*s(x))/(s(y)*s(y))"),
    FlattenRule("seqmul_left", "(x/xq) |*| y", "(x |*| y)/xq"),
    FlattenRule(
        "seqmul_right",
        "x |*| (y/yq)",
        "(x*x*x |*| (y*(yq + 1 - s(x)*s(x))))/((x |*| yq)*(x |*| yq) + 1 - s(x)*s(x))",
    ),
)

RULES: dict[str, FlattenRule] = {rule.name: rule for rule in FLATTEN_RULES}
