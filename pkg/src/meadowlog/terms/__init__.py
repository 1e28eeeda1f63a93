"""Term language: syntax trees, parser and printer."""

from meadowlog.terms.ast import (
    BOTTOM,
    FULL_SIGNATURE,
    ONE,
    TWO,
    ZERO,
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
    Signature,
    Term,
    Var,
    free_variables,
    generalized_sum,
    sample_constants,
    substitute,
    sum_terms,
)
from meadowlog.terms.grammar import parse
from meadowlog.terms.printer import to_text

__all__ = [
    "BOTTOM",
    "FULL_SIGNATURE",
    "ONE",
    "TWO",
    "ZERO",
    "Add",
    "Cond",
    "Const",
    "Div",
    "FunApp",
    "Log2",
    "Mul",
    "Neg",
    "SeqMul",
    "Sign",
    "Signature",
    "Term",
    "Var",
    "free_variables",
    "generalized_sum",
    "parse",
    "sample_constants",
    "substitute",
    "sum_terms",
    "to_text",
]
