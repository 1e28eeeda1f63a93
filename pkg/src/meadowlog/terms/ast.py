"""Abstract syntax for terms over the extended meadow signature.

Nodes are frozen dataclasses, so structural equality and hashing come for
free and terms can be shared between trees.
"""

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeAlias

from meadowlog.core.values import Peripheral
from meadowlog.utils.errors import IllegalLiteralError, SignatureError, TermError

RESERVED_WORDS = frozenset({"bot", "inf", "log2", "s", "cond"})


@dataclass(frozen=True, slots=True)
class Const:
    """A literal: a non-negative rational or a peripheral value."""

    value: Fraction | Peripheral

    def __post_init__(self) -> None:
        if isinstance(self.value, Peripheral):
            return
        value = Fraction(self.value)
        if value < 0:
            raise TermError(f"Negative literal {value}; write it with unary minus")
        object.__setattr__(self, "value", value)


@dataclass(frozen=True, slots=True)
class Var:
    """A variable ranging over the carrier."""

    name: str

    def __post_init__(self) -> None:
        if self.name in RESERVED_WORDS:
            raise TermError(f"'{self.name}' is a reserved word")


@dataclass(frozen=True, slots=True)
class FunApp:
    """A function variable applied to a sample-point label, e.g. ``alpha(c1)``."""

    function: str
    label: str


@dataclass(frozen=True, slots=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "Term"


@dataclass(frozen=True, slots=True)
class Mul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Div:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Log2:
    operand: "Term"


@dataclass(frozen=True, slots=True)
class Cond:
    """``then <| test |> otherwise``."""

    then: "Term"
    test: "Term"
    otherwise: "Term"


@dataclass(frozen=True, slots=True)
class SeqMul:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, slots=True)
class Sign:
    operand: "Term"


Term: TypeAlias = Const | Var | FunApp | Add | Neg | Mul | Div | Log2 | Cond | SeqMul | Sign

ZERO = Const(Fraction(0))
ONE = Const(Fraction(1))
TWO = Const(Fraction(2))
BOTTOM = Const(Peripheral.BOTTOM)

OPERATOR_NAMES: dict[type, str] = {
    Add: "add",
    Neg: "neg",
    Mul: "mul",
    Div: "div",
    Log2: "log2",
    Cond: "cond",
    SeqMul: "seqmul",
    Sign: "sign",
}

LEAF_TYPES = (Const, Var, FunApp)


def children(term: Term) -> tuple[Term, ...]:
    """Direct subterms in left-to-right order."""
    match term:
        case Add(l, r) | Mul(l, r) | Div(l, r) | SeqMul(l, r):
            return (l, r)
        case Neg(t) | Log2(t) | Sign(t):
            return (t,)
        case Cond(x, y, z):
            return (x, y, z)
        case _:
            return ()


def rebuild(term: Term, new_children: Sequence[Term]) -> Term:
    """Same node kind as ``term`` with replaced children."""
    if isinstance(term, LEAF_TYPES):
        return term
    return type(term)(*new_children)


def subterms(term: Term) -> Iterator[Term]:
    """Pre-order iteration over ``term`` and all its subterms."""
    stack = [term]
    while stack:
        current = stack.pop()
        yield current
        stack.extend(reversed(children(current)))


def free_variables(term: Term) -> frozenset[str]:
    """Names of all variables occurring in ``term``."""
    return frozenset(t.name for t in subterms(term) if isinstance(t, Var))


def function_symbols(term: Term) -> frozenset[str]:
    """Function variables applied somewhere in ``term``."""
    return frozenset(t.function for t in subterms(term) if isinstance(t, FunApp))


def sample_labels(term: Term) -> frozenset[str]:
    """Sample-point labels occurring in ``term``."""
    return frozenset(t.label for t in subterms(term) if isinstance(t, FunApp))


def size(term: Term) -> int:
    return sum(1 for _ in subterms(term))


def depth(term: Term) -> int:
    kids = children(term)
    return 1 + max((depth(k) for k in kids), default=0)


def count_nodes(term: Term, node_type: type) -> int:
    return sum(1 for t in subterms(term) if isinstance(t, node_type))


def substitute(term: Term, mapping: Mapping[str, Term]) -> Term:
    """Replace variables by terms, simultaneously.

    Args:
        term: The term to rewrite.
        mapping: Variable name to replacement term.

    Returns:
        ``term`` with every ``Var(name)`` in ``mapping`` replaced.
    """
    if isinstance(term, Var):
        return mapping.get(term.name, term)
    if isinstance(term, LEAF_TYPES):
        return term
    return rebuild(term, [substitute(child, mapping) for child in children(term)])


def substitute_label(term: Term, placeholder: str, label: str) -> Term:
    """Replace the label ``placeholder`` by ``label`` in every application."""
    if isinstance(term, FunApp):
        return FunApp(term.function, label) if term.label == placeholder else term
    if isinstance(term, LEAF_TYPES):
        return term
    return rebuild(
        term, [substitute_label(child, placeholder, label) for child in children(term)]
    )


def sum_terms(terms: Sequence[Term]) -> Term:
    """Left-nested sum; the empty sum is ``0``."""
    if not terms:
        return ZERO
    total = terms[0]
    for term in terms[1:]:
        total = Add(total, term)
    return total


def generalized_sum(body: Term, labels: Sequence[str], placeholder: str = "x") -> Term:
    """Expand a finitary sum of ``body`` over sample-point labels.

    The body mentions the bound label through applications such as
    ``alpha(x)``; each summand substitutes one label for ``placeholder``.

    Args:
        body: Summand with the placeholder label.
        labels: Ordered, pairwise distinct labels.
        placeholder: Label name bound by the sum.

    Returns:
        ``[a_1/x]body + ... + [a_n/x]body`` as a left-nested chain.

    Raises:
        TermError: If ``labels`` is empty or contains duplicates.
    """
    if not labels:
        raise TermError("Generalized sum over an empty label list")
    if len(set(labels)) != len(labels):
        raise TermError(f"Generalized sum labels are not distinct: {list(labels)}")
    return sum_terms([substitute_label(body, placeholder, label) for label in labels])


def sample_constants(n: int) -> list[str]:
    """Labels ``c1 .. cn``."""
    return [f"c{i}" for i in range(1, n + 1)]


@dataclass(frozen=True)
class Signature:
    """Allowed operators, function variables and sample constants.

    Attributes:
        operators: Operator names from ``OPERATOR_NAMES``.
        function_variables: Names usable in applications.
        sample_count: Applications may use labels ``c1 .. c<sample_count>``.
        allow_bottom: Whether the ``bot`` literal is allowed.
    """

    operators: frozenset[str]
    function_variables: frozenset[str] = field(default_factory=frozenset)
    sample_count: int = 0
    allow_bottom: bool = True

    def __post_init__(self) -> None:
        unknown = set(self.operators) - set(OPERATOR_NAMES.values())
        if unknown:
            raise SignatureError(sorted(unknown)[0])
        if not self.operators:
            raise TermError("Signature has no operators")

    def check(self, term: Term) -> None:
        """Verify that ``term`` only uses this signature.

        Raises:
            SignatureError: On the first operator outside the signature.
            IllegalLiteralError: On a peripheral literal the signature excludes.
        """
        labels = set(sample_constants(self.sample_count))
        for t in subterms(term):
            match t:
                case Const(Peripheral() as p):
                    if p is not Peripheral.BOTTOM:
                        raise IllegalLiteralError(p.value, "a bottom-mode signature")
                    if not self.allow_bottom:
                        raise IllegalLiteralError(p.value, "this signature")
                case FunApp(function, label):
                    if function not in self.function_variables or label not in labels:
                        raise SignatureError(f"{function}({label})")
                case Var() | Const():
                    pass
                case _:
                    name = OPERATOR_NAMES[type(t)]
                    if name not in self.operators:
                        raise SignatureError(name)


FULL_SIGNATURE = Signature(operators=frozenset(OPERATOR_NAMES.values()))
