"""Finite event spaces with meadow-valued conditional probability.

Events are subsets of the atomic outcomes, stored as bitsets over the
enumeration order of the underlying pmf. All probabilities are exact.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from meadowlog.core import operations as ops
from meadowlog.core.values import MeadowValue, format_value
from meadowlog.measures.pmf import QUARTER_WEIGHTS, Pmf, pmf_grid
from meadowlog.utils.errors import EventError, ForeignLabelError, SpaceTooLargeError

BAYES_MAX_OUTCOMES = 8


@dataclass(frozen=True)
class Event:
    """A subset of the outcomes of a space of ``size`` outcomes.

    Attributes:
        mask: Bit ``i`` is set when outcome ``i`` belongs to the event.
        size: Number of outcomes of the space.
    """

    mask: int
    size: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.size:
            raise EventError(f"Mask {self.mask:#b} exceeds {self.size} outcomes")

    def _same_space(self, other: "Event") -> None:
        if self.size != other.size:
            raise EventError(
                f"Events over {self.size} and {other.size} outcomes do not combine"
            )

    def __and__(self, other: "Event") -> "Event":
        self._same_space(other)
        return Event(self.mask & other.mask, self.size)

    def __or__(self, other: "Event") -> "Event":
        self._same_space(other)
        return Event(self.mask | other.mask, self.size)

    def __invert__(self) -> "Event":
        return Event(~self.mask & ((1 << self.size) - 1), self.size)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def indices(self) -> list[int]:
        return [i for i in range(self.size) if i in self]


@dataclass(frozen=True)
class EventSpace:
    """The powerset Boolean algebra over the outcomes of a pmf."""

    pmf: Pmf

    @property
    def outcomes(self) -> list[str]:
        return self.pmf.labels

    def event(self, labels: Iterable[str]) -> Event:
        """The event holding exactly ``labels``.

        Raises:
            ForeignLabelError: If a label is not an outcome of the space.
        """
        outcomes = self.outcomes
        mask = 0
        for label in labels:
            if label not in outcomes:
                raise ForeignLabelError(label)
            mask |= 1 << outcomes.index(label)
        return Event(mask, len(outcomes))

    def empty(self) -> Event:
        return Event(0, len(self.pmf))

    def full(self) -> Event:
        return ~self.empty()

    def events(self) -> Iterator[Event]:
        """Every event, from the empty event to the full one."""
        n = len(self.pmf)
        for mask in range(1 << n):
            yield Event(mask, n)

    def labels_of(self, event: Event) -> list[str]:
        outcomes = self.outcomes
        return [outcomes[i] for i in event.indices()]

    def _check(self, event: Event) -> None:
        if event.size != len(self.pmf):
            raise EventError(
                f"Event over {event.size} outcomes used in a space of {len(self.pmf)}"
            )


def prob(space: EventSpace, a: Event) -> Fraction:
    """``P(A)``, the exact sum of the weights of the outcomes in ``a``."""
    space._check(a)
    weights = space.pmf.weights
    return sum((weights[i] for i in a.indices()), Fraction(0))


def cond_prob(space: EventSpace, a: Event, b: Event) -> MeadowValue:
    """``P(A | B) = P(A and B) / P(B)``; ``bot`` exactly when ``P(B) = 0``."""
    return ops.div(prob(space, a & b), prob(space, b))


def bayes_rhs(space: EventSpace, a: Event, b: Event) -> MeadowValue:
    """``P(B | A) * P(A) / P(B)`` with meadow operations."""
    return ops.div(ops.mul(cond_prob(space, b, a), prob(space, a)), prob(space, b))


@dataclass(frozen=True)
class BayesCase:
    """One ordered pair of events with both sides of the Bayes-Price identity."""

    a: Event
    b: Event
    prob_a: Fraction
    prob_b: Fraction
    lhs: MeadowValue
    rhs: MeadowValue

    @property
    def guarded(self) -> bool:
        """The guard ``P(A) != 0 or P(B) = 0``."""
        return self.prob_a != 0 or self.prob_b == 0

    @property
    def agrees(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self, space: EventSpace) -> dict:
        return {
            "a": space.labels_of(self.a),
            "b": space.labels_of(self.b),
            "p_a": format_value(self.prob_a),
            "p_b": format_value(self.prob_b),
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
        }


@dataclass
class BayesReport:
    """Outcome of checking every ordered event pair of a space.

    Attributes:
        space: The checked space.
        checked: Number of ordered pairs.
        violations: Guarded pairs whose sides differ.
        unguarded: Guard-failing pairs whose sides differ.
    """

    space: EventSpace
    checked: int = 0
    violations: list[BayesCase] = field(default_factory=list)
    unguarded: list[BayesCase] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations


def bayes_check(space: EventSpace, max_outcomes: int = BAYES_MAX_OUTCOMES) -> BayesReport:
    """Check ``P(A | B) = P(B | A) * P(A) / P(B)`` on every ordered pair.

    Pairs satisfying the guard ``P(A) != 0 or P(B) = 0`` must agree; the
    report lists those that do not, and separately every guard-failing
    pair whose sides differ.

    Args:
        space: The event space.
        max_outcomes: Largest accepted number of outcomes. A space of ``n``
            outcomes has ``4**n`` ordered event pairs.

    Raises:
        SpaceTooLargeError: If ``space`` has more than ``max_outcomes`` outcomes.
    """
    outcomes = len(space.pmf)
    if outcomes > max_outcomes:
        raise SpaceTooLargeError(outcomes, max_outcomes)
    report = BayesReport(space)
    events = list(space.events())
    for a in events:
        for b in events:
            case = BayesCase(
                a=a,
                b=b,
                prob_a=prob(space, a),
                prob_b=prob(space, b),
                lhs=cond_prob(space, a, b),
                rhs=bayes_rhs(space, a, b),
            )
            report.checked += 1
            if case.agrees:
                continue
            if case.guarded:
                report.violations.append(case)
            else:
                report.unguarded.append(case)
    return report


def space_grid(
    max_outcomes: int, weights: Sequence[Fraction] = QUARTER_WEIGHTS
) -> Iterator[EventSpace]:
    """Event spaces over every gridded pmf with 1 to ``max_outcomes`` outcomes."""
    for n in range(1, max_outcomes + 1):
        for pmf in pmf_grid(n, weights):
            yield EventSpace(pmf)
