"""Concrete syntax of terms: a LALR grammar and a tree transformer.

Binary minus is sugar for ``a + (-b)``. A rational literal such as
``1/2`` is a single token; ``1/0`` has no literal reading and parses as
a division.
"""

from fractions import Fraction
from functools import cache

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedInput, VisitError

from meadowlog.core.values import Peripheral
from meadowlog.terms.ast import (
    BOTTOM,
    RESERVED_WORDS,
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
from meadowlog.utils.errors import MeadowError, TermSyntaxError

TERM_GRAMMAR = r"""
    ?start: sum

    ?sum: prod
        | sum "+" prod      -> add
        | sum "-" prod      -> sub

    ?prod: unary
         | prod "*" unary   -> mul
         | prod "/" unary   -> div
         | prod "|*|" unary -> seqmul

    ?unary: "-" unary       -> neg
          | atom

    ?atom: RATIONAL                         -> number
         | INT                              -> number
         | "bot"                            -> bottom
         | POS_INF                          -> pos_inf
         | NEG_INF                          -> neg_inf
         | IDENT "(" IDENT ")"              -> funapp
         | IDENT                            -> var
         | "log2" "(" sum ")"               -> log2
         | "s" "(" sum ")"                  -> sign
         | "cond" "(" sum ";" sum ";" sum ")" -> cond
         | "(" sum ")"

    RATIONAL: /\d+\/0*[1-9]\d*/
    INT: /\d+/
    POS_INF: /\+inf(?![A-Za-z0-9_])/
    NEG_INF: /-inf(?![A-Za-z0-9_])/
    IDENT: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""


class TermBuilder(Transformer):
    """Turns the parse tree into :mod:`meadowlog.terms.ast` nodes."""

    def number(self, items: list[Token]) -> Term:
        return Const(Fraction(str(items[0])))

    def bottom(self, items: list[Token]) -> Term:
        return BOTTOM

    def pos_inf(self, items: list[Token]) -> Term:
        return Const(Peripheral.POS_INF)

    def neg_inf(self, items: list[Token]) -> Term:
        return Const(Peripheral.NEG_INF)

    def var(self, items: list[Token]) -> Term:
        token = items[0]
        if str(token) in RESERVED_WORDS:
            raise TermSyntaxError(str(token), token.start_pos or 0, ["IDENT"])
        return Var(str(token))

    def funapp(self, items: list[Token]) -> Term:
        return FunApp(str(items[0]), str(items[1]))

    def add(self, items: list[Term]) -> Term:
        return Add(items[0], items[1])

    def sub(self, items: list[Term]) -> Term:
        return Add(items[0], Neg(items[1]))

    def mul(self, items: list[Term]) -> Term:
        return Mul(items[0], items[1])

    def div(self, items: list[Term]) -> Term:
        return Div(items[0], items[1])

    def seqmul(self, items: list[Term]) -> Term:
        return SeqMul(items[0], items[1])

    def neg(self, items: list[Term]) -> Term:
        return Neg(items[0])

    def log2(self, items: list[Term]) -> Term:
        return Log2(items[0])

    def sign(self, items: list[Term]) -> Term:
        return Sign(items[0])

    def cond(self, items: list[Term]) -> Term:
        return Cond(items[0], items[1], items[2])


@cache
def get_parser() -> Lark:
    """The shared LALR parser."""
    return Lark(TERM_GRAMMAR, parser="lalr", start="start")


def parse(text: str) -> Term:
    """Parse term text.

    Args:
        text: Term in the surface syntax, e.g. ``"x |*| log2(1/x)"``.

    Returns:
        The term.

    Raises:
        TermSyntaxError: With the offending position and the expected tokens.
    """
    try:
        tree = get_parser().parse(text)
    except UnexpectedInput as e:
        position = getattr(e, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or []
        raise TermSyntaxError(text, position, sorted(expected)) from e
    try:
        return TermBuilder().transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, TermSyntaxError):
            raise TermSyntaxError(text, e.orig_exc.position, e.orig_exc.expected) from e
        if isinstance(e.orig_exc, MeadowError):
            raise e.orig_exc from e
        raise
