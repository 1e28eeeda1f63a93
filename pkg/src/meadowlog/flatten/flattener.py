"""Bottom-up fracterm flattening.

Division-free, bot-free subterms are treated as leaves ``t/1``; a division
of two such terms is already flat. Every other node combines the flattened
children through the instantiable rules of :mod:`meadowlog.flatten.rules`,
children first. A conditional or sequential product rewrites one argument
position per rule and skips positions whose denominator is already ``1``:
then, else and test for ``cond``; right, then left for ``|*|``.
"""

from meadowlog.core.values import Peripheral
from meadowlog.flatten.rules import RULES, FlatFracterm
from meadowlog.terms.ast import (
    ONE,
    Add,
    Cond,
    Const,
    Div,
    Log2,
    Mul,
    Neg,
    SeqMul,
    Sign,
    Term,
    children,
    subterms,
)
from meadowlog.terms.printer import to_text
from meadowlog.utils.errors import IllegalLiteralError


def _is_one(term: Term) -> bool:
    return term == ONE


def _around(inner: FlatFracterm, step: FlatFracterm, core: Term) -> FlatFracterm:
    """Put ``inner``, the flattening of ``core``, in place of ``core`` in ``step``.

    ``step`` is a rule instance ``A/B`` with ``A`` equal to ``core`` or
    ``core*k``; neither ``k`` nor ``B`` mentions a position that ``inner``
    has already rewritten.
    """
    match step.numerator:
        case Mul(factor, k) if factor == core:
            inner = RULES["mul_plain"].instantiate(x=inner.numerator, xq=inner.denominator, y=k)
        case numerator if numerator != core:
            raise ValueError(f"Rule instance {step.to_text()} does not wrap {to_text(core)}")
    return RULES["div_plain"].instantiate(
        x=inner.numerator, xq=inner.denominator, y=step.denominator
    )


def _then(flat: FlatFracterm | None, step: FlatFracterm, core: Term) -> FlatFracterm:
    return step if flat is None else _around(flat, step, core)


def _cond(then: FlatFracterm, test: FlatFracterm, otherwise: FlatFracterm) -> FlatFracterm:
    # then and else positions left to right, the test last: the other two
    # rules copy the test into their denominators
    x, y, z = then.numerator, test.numerator, otherwise.numerator
    core = Cond(x, y, z)
    flat: FlatFracterm | None = None
    if not _is_one(then.denominator):
        flat = RULES["cond_then"].instantiate(x=x, xq=then.denominator, y=y, z=z)
    if not _is_one(otherwise.denominator):
        step = RULES["cond_else"].instantiate(x=x, y=y, z=z, zq=otherwise.denominator)
        flat = _then(flat, step, core)
    if not _is_one(test.denominator):
        step = RULES["cond_test"].instantiate(x=x, y=y, yq=test.denominator, z=z)
        flat = _then(flat, step, core)
    return flat if flat is not None else RULES["leaf"].instantiate(x=core)


def _seqmul(left: FlatFracterm, right: FlatFracterm) -> FlatFracterm:
    # right argument first: the right rule copies its left argument
    x, y = left.numerator, right.numerator
    core = SeqMul(x, y)
    flat: FlatFracterm | None = None
    if not _is_one(right.denominator):
        flat = RULES["seqmul_right"].instantiate(x=x, y=y, yq=right.denominator)
    if not _is_one(left.denominator):
        step = RULES["seqmul_left"].instantiate(x=x, xq=left.denominator, y=y)
        flat = _then(flat, step, core)
    return flat if flat is not None else RULES["leaf"].instantiate(x=core)


def _combine(term: Term, parts: list[FlatFracterm]) -> FlatFracterm:
    match term:
        case Add():
            a, b = parts
            return RULES["add"].instantiate(
                x=a.numerator, xq=a.denominator, y=b.numerator, yq=b.denominator
            )
        case Neg():
            (a,) = parts
            return RULES["neg"].instantiate(x=a.numerator, xq=a.denominator)
        case Mul():
            a, b = parts
            return RULES["mul"].instantiate(
                x=a.numerator, xq=a.denominator, y=b.numerator, yq=b.denominator
            )
        case Div():
            a, b = parts
            return RULES["div"].instantiate(
                x=a.numerator, xq=a.denominator, y=b.numerator, yq=b.denominator
            )
        case Log2():
            (a,) = parts
            return RULES["log2"].instantiate(x=a.numerator, y=a.denominator)
        case Sign():
            (a,) = parts
            return RULES["sign"].instantiate(x=a.numerator, y=a.denominator)
        case Cond():
            return _cond(*parts)
        case SeqMul():
            return _seqmul(*parts)
    raise TypeError(f"Not a term: {term!r}")


def _flatten(term: Term) -> tuple[FlatFracterm, bool]:
    """Flatten ``term``; the flag reports whether ``term`` itself is plain."""
    if isinstance(term, Const) and term.value is Peripheral.BOTTOM:
        return RULES["bottom"].instantiate(), False
    kids = children(term)
    if not kids:
        return RULES["leaf"].instantiate(x=term), True

    results = [_flatten(child) for child in kids]
    if all(plain for _, plain in results):
        if isinstance(term, Div):
            return FlatFracterm(term.left, term.right), False
        return RULES["leaf"].instantiate(x=term), True
    return _combine(term, [flat for flat, _ in results]), False


def flatten(term: Term) -> FlatFracterm:
    """Rewrite a bottom-mode term into a flat fracterm ``p/q``.

    Args:
        term: Any term without infinity literals.

    Returns:
        A fracterm whose numerator and denominator contain neither a
        division nor ``bot`` and which denotes the same value as ``term``
        in every environment.

    Raises:
        IllegalLiteralError: If ``term`` contains ``+inf`` or ``-inf``.
    """
    for t in subterms(term):
        if isinstance(t, Const) and t.value in (Peripheral.POS_INF, Peripheral.NEG_INF):
            raise IllegalLiteralError(t.value.value, "flattening")
    flat, _ = _flatten(term)
    return flat
