"""Information measures computed directly with the totalized operations.

Every measure is a generalized sum of ``P(x) |*| ...`` summands, so a zero
weight switches its summand off regardless of the logarithm next to it.
Sums are taken left to right in the enumeration order of the pmf.
"""

from collections.abc import Callable, Mapping
from functools import reduce

from meadowlog.core import operations as ops
from meadowlog.core.values import Carrier, MeadowValue, Mode, coerce
from meadowlog.measures.pmf import Pmf


def _sum(values: list[MeadowValue], mode: Mode) -> MeadowValue:
    return reduce(lambda acc, v: ops.add(acc, v, mode), values)


def seq_expected_value(
    p: Pmf,
    f: Callable[[str], MeadowValue] | Mapping[str, MeadowValue],
    mode: Mode = Mode.BOTTOM,
    carrier: Carrier = Carrier.APPROX,
) -> MeadowValue:
    """Sequential expected value ``sum_x P(x) |*| f(x)``.

    Args:
        p: The distribution.
        f: Outcome label to value, as a function or a table.
        mode: Semantic mode.
        carrier: Number backend.

    Returns:
        The expectation; ``bot`` only when ``f`` is ``bot`` on the support.
    """
    lookup = f.__getitem__ if isinstance(f, Mapping) else f
    return _sum(
        [
            ops.seqmul(coerce(weight, carrier), coerce(lookup(label), carrier), mode)
            for label, weight in p.entries
        ],
        mode,
    )


def entropy(
    p: Pmf, carrier: Carrier = Carrier.APPROX, mode: Mode = Mode.BOTTOM
) -> MeadowValue:
    """Shannon entropy in bits, ``-sum P(x) |*| log2 P(x)``.

    On the exact carrier this raises :class:`InexactError` unless every
    nonzero weight is a power of two.
    """

    def log_p(label: str) -> MeadowValue:
        return ops.log2(coerce(p.weight(label), carrier), mode, carrier)

    return ops.neg(seq_expected_value(p, log_p, mode, carrier), mode)


def cross_entropy(
    p: Pmf, q: Pmf, carrier: Carrier = Carrier.APPROX, mode: Mode = Mode.BOTTOM
) -> MeadowValue:
    """Cross-entropy ``-sum P(x) |*| log2 Q(x)``.

    In bottom mode the result is ``bot`` exactly when some outcome has
    ``P(x) > 0`` and ``Q(x) = 0``.

    Raises:
        LabelMismatchError: If the pmfs enumerate different labels.
    """
    p.require_same_labels(q)

    def log_q(label: str) -> MeadowValue:
        return ops.log2(coerce(q.weight(label), carrier), mode, carrier)

    return ops.neg(seq_expected_value(p, log_q, mode, carrier), mode)


def kl_divergence(
    p: Pmf, q: Pmf, carrier: Carrier = Carrier.APPROX, mode: Mode = Mode.BOTTOM
) -> MeadowValue:
    """Kullback-Leibler divergence ``sum P(x) |*| log2(P(x) / Q(x))``.

    Raises:
        LabelMismatchError: If the pmfs enumerate different labels.
    """
    p.require_same_labels(q)

    def log_ratio(label: str) -> MeadowValue:
        ratio = ops.div(
            coerce(p.weight(label), carrier), coerce(q.weight(label), carrier), mode
        )
        return ops.log2(ratio, mode, carrier)

    return seq_expected_value(p, log_ratio, mode, carrier)


def js_divergence(
    p: Pmf, q: Pmf, carrier: Carrier = Carrier.APPROX, mode: Mode = Mode.BOTTOM
) -> MeadowValue:
    """Jensen-Shannon divergence ``KL(P, M) + KL(Q, M)`` with ``M = (P + Q) / 2``.

    Never ``bot``: ``M`` is positive wherever either pmf is.
    """
    m = Pmf.mixture(p, q)
    return ops.add(
        kl_divergence(p, m, carrier, mode), kl_divergence(q, m, carrier, mode), mode
    )
