"""Minimal-parenthesis printing of terms.

The output reparses to a structurally equal term.
"""

import re

from meadowlog.core.values import Peripheral
from meadowlog.terms.ast import (
    Add,
    Cond,
    Const,
    Div,
    FunApp,
    Log2,
    Mul,
    Neg,
    SeqMul,
    Sign,
    Term,
    Var,
)

SUM, PROD, UNARY, ATOM = 1, 2, 3, 4

_LEADING_LITERAL_DENOMINATOR = re.compile(r"0*[1-9]")


def _wrap(term: Term, minimum: int) -> str:
    text, level = _render(term)
    return text if level >= minimum else f"({text})"


def _division(left: str, right: str) -> str:
    # "1" "/" "2" must not fuse into the literal 1/2
    if left[-1].isdigit() and _LEADING_LITERAL_DENOMINATOR.match(right):
        return f"{left} / {right}"
    return f"{left}/{right}"


def _render(term: Term) -> tuple[str, int]:
    match term:
        case Const(Peripheral() as p):
            return p.value, ATOM
        case Const(value):
            return str(value), ATOM
        case Var(name):
            return name, ATOM
        case FunApp(function, label):
            return f"{function}({label})", ATOM
        case Log2(t):
            return f"log2({to_text(t)})", ATOM
        case Sign(t):
            return f"s({to_text(t)})", ATOM
        case Cond(x, y, z):
            return f"cond({to_text(x)}; {to_text(y)}; {to_text(z)})", ATOM
        case Add(l, Neg(r)):
            return f"{_wrap(l, SUM)} - {_wrap(r, PROD)}", SUM
        case Add(l, r):
            return f"{_wrap(l, SUM)} + {_wrap(r, PROD)}", SUM
        case Mul(l, r):
            return f"{_wrap(l, PROD)}*{_wrap(r, UNARY)}", PROD
        case SeqMul(l, r):
            return f"{_wrap(l, PROD)} |*| {_wrap(r, UNARY)}", PROD
        case Div(l, r):
            return _division(_wrap(l, PROD), _wrap(r, UNARY)), PROD
        case Neg(t):
            if isinstance(t, Neg) or (
                isinstance(t, Const) and isinstance(t.value, Peripheral)
            ):
                return f"-({to_text(t)})", UNARY
            return f"-{_wrap(t, UNARY)}", UNARY
    raise TypeError(f"Not a term: {term!r}")


def to_text(term: Term) -> str:
    """Render ``term`` in the surface syntax.

    Example:
        >>> to_text(Add(Var("x"), Neg(Var("y"))))
        'x - y'
    """
    return _render(term)[0]
