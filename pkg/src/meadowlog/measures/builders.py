"""Closed term expressions for the information measures.

Builders produce terms over the function variables ``alpha`` (for P) and
``beta`` (for Q) applied to the sample constants ``c1 .. cn``. Binding the
function variables with :func:`sample_environment` and evaluating the term
yields the same value as the direct computation in
:mod:`meadowlog.measures.direct`.
"""

from enum import Enum
from fractions import Fraction

from meadowlog.engine.evaluator import Environment
from meadowlog.measures.pmf import Pmf
from meadowlog.terms.ast import (
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
    Term,
    generalized_sum,
    sample_constants,
)
from meadowlog.utils.errors import VariantError

ALPHA = "alpha"
BETA = "beta"
PLACEHOLDER = "x"
HALF = Const(Fraction(1, 2))


class MeasureVariant(str, Enum):
    """How a measure is expressed as a term."""

    DIRECT = "direct"
    SEQMUL = "seqmul"
    SEQMUL_DIV = "seqmul_div"
    COMPOSITE_F = "composite_f"
    SIGN_CHAIN = "sign_chain"
    F_XY = "f_xy"
    F_XY_SIGN = "f_xy_sign"


ENTROPY_VARIANTS = (
    MeasureVariant.SEQMUL,
    MeasureVariant.SEQMUL_DIV,
    MeasureVariant.COMPOSITE_F,
    MeasureVariant.SIGN_CHAIN,
)
CROSS_ENTROPY_VARIANTS = (
    MeasureVariant.SEQMUL,
    MeasureVariant.SEQMUL_DIV,
    MeasureVariant.SIGN_CHAIN,
    MeasureVariant.F_XY,
    MeasureVariant.F_XY_SIGN,
)


def _alpha(label: str = PLACEHOLDER) -> Term:
    return FunApp(ALPHA, label)


def _beta(label: str = PLACEHOLDER) -> Term:
    return FunApp(BETA, label)


def _s2(term: Term) -> Term:
    return Mul(Sign(term), Sign(term))


def _one_minus(term: Term) -> Term:
    return Add(ONE, Neg(term))


def _sum(body: Term, n: int) -> Term:
    if n < 0:
        raise ValueError(f"Sample count must be non-negative, got {n}")
    if n == 0:
        return ZERO
    return generalized_sum(body, sample_constants(n), PLACEHOLDER)


def _chain(labels: list[str]) -> Term:
    """The last nonzero weight: ``t_1 = alpha(c1)``,
    ``t_(i+1) = s2(alpha(c_(i+1)))*alpha(c_(i+1)) + (1 - s2(alpha(c_(i+1))))*t_i``.
    """
    chain = _alpha(labels[0])
    for label in labels[1:]:
        a = _alpha(label)
        chain = Add(Mul(_s2(a), a), Mul(_one_minus(_s2(a)), chain))
    return chain


def _sign_chain_sum(n: int, inner: str) -> Term:
    """``-sum alpha(c_i) * log2(s2(alpha(c_i))*g(c_i) + (1 - s2(alpha(c_i)))*t_n)``."""
    labels = sample_constants(n)
    if not labels:
        return Neg(ZERO)
    chain = _chain(labels)
    summands: Term | None = None
    for label in labels:
        a = _alpha(label)
        g = FunApp(inner, label)
        summand = Mul(a, Log2(Add(Mul(_s2(a), g), Mul(_one_minus(_s2(a)), chain))))
        summands = summand if summands is None else Add(summands, summand)
    return Neg(summands)


def build_entropy_term(n: int, variant: MeasureVariant = MeasureVariant.SEQMUL) -> Term:
    """Entropy of ``alpha`` over ``c1 .. cn``.

    Raises:
        VariantError: If ``variant`` does not express entropy.
    """
    a = _alpha()
    match variant:
        case MeasureVariant.SEQMUL:
            return Neg(_sum(SeqMul(a, Log2(a)), n))
        case MeasureVariant.SEQMUL_DIV:
            return _sum(SeqMul(a, Log2(Div(ONE, a))), n)
        case MeasureVariant.COMPOSITE_F:
            # f(x) = x |*| log2 x spelled out through the conditional
            return Neg(_sum(Cond(Mul(a, Log2(a)), a, ZERO), n))
        case MeasureVariant.SIGN_CHAIN:
            return _sign_chain_sum(n, ALPHA)
    raise VariantError(variant.value, "entropy")


def build_cross_entropy_term(
    n: int, variant: MeasureVariant = MeasureVariant.SEQMUL
) -> Term:
    """Cross-entropy of ``alpha`` relative to ``beta`` over ``c1 .. cn``.

    The ``SIGN_CHAIN`` form agrees with the direct measure wherever that is
    an ordinary number.

    Raises:
        VariantError: If ``variant`` does not express cross-entropy.
    """
    a, b = _alpha(), _beta()
    match variant:
        case MeasureVariant.SEQMUL:
            return Neg(_sum(SeqMul(a, Log2(b)), n))
        case MeasureVariant.SEQMUL_DIV:
            return _sum(SeqMul(a, Log2(Div(ONE, b))), n)
        case MeasureVariant.SIGN_CHAIN:
            return _sign_chain_sum(n, BETA)
        case MeasureVariant.F_XY:
            # f(x, y) = x |*| (log2(y*y)/2) + 0*y keeps bot in y visible
            f = Add(SeqMul(a, Div(Log2(Mul(b, b)), TWO)), Mul(ZERO, b))
            return Neg(_sum(f, n))
        case MeasureVariant.F_XY_SIGN:
            f = Mul(a, Div(Log2(Add(Add(Mul(b, b), ONE), Neg(_s2(a)))), TWO))
            return Neg(_sum(f, n))
    raise VariantError(variant.value, "cross-entropy")


def build_kl_term(n: int) -> Term:
    """``sum alpha(c_i) |*| log2(alpha(c_i) / beta(c_i))``."""
    a, b = _alpha(), _beta()
    return _sum(SeqMul(a, Log2(Div(a, b))), n)


def build_js_term(n: int) -> Term:
    """``KL(alpha, m) + KL(beta, m)`` with ``m = 1/2 * (alpha + beta)`` inlined."""
    a, b = _alpha(), _beta()
    m = Mul(HALF, Add(a, b))
    return Add(
        _sum(SeqMul(a, Log2(Div(a, m))), n),
        _sum(SeqMul(b, Log2(Div(b, m))), n),
    )


def sample_environment(p: Pmf, q: Pmf | None = None) -> Environment:
    """Bind ``alpha`` (and ``beta``) to the weights of ``p`` (and ``q``).

    The i-th outcome of each pmf is bound at the sample constant ``c<i>``.

    Raises:
        LabelMismatchError: If ``q`` enumerates different labels.
    """
    labels = sample_constants(len(p))
    functions = {ALPHA: dict(zip(labels, p.weights))}
    if q is not None:
        p.require_same_labels(q)
        functions[BETA] = dict(zip(labels, q.weights))
    return Environment(functions=functions, labels=tuple(labels))
