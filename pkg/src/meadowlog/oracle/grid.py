"""Exhaustive-grid semantic equivalence of terms.

Two terms are equivalent on a grid when, for every assignment of grid
values to their variables, they evaluate to the same peripheral value or
to ordinary values that agree exactly (exact carrier) or within a
relative tolerance (approximate carrier).
"""

import itertools
import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from meadowlog.core.values import (
    BOT,
    NEG_INF,
    POS_INF,
    Carrier,
    MeadowValue,
    Mode,
    Peripheral,
    format_value,
)
from meadowlog.engine.evaluator import EMPTY_ENVIRONMENT, Environment, evaluate
from meadowlog.terms.ast import Term, free_variables
from meadowlog.terms.printer import to_text
from meadowlog.utils.errors import InexactError, MeadowError

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Grid:
    """A finite set of values that assignments are drawn from.

    Attributes:
        values: The grid values, in enumeration order.
        exhaustive: When True the grid must hit every semantic branch:
            it holds ``bot``, zero, a positive and a negative value.
    """

    values: tuple[MeadowValue, ...]
    exhaustive: bool = True

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError("A grid needs at least one value")
        if not self.exhaustive:
            return
        ordinary = [v for v in self.values if not isinstance(v, Peripheral)]
        missing = []
        if BOT not in self.values:
            missing.append("bot")
        if 0 not in ordinary:
            missing.append("zero")
        if not any(v > 0 for v in ordinary):
            missing.append("a positive value")
        if not any(v < 0 for v in ordinary):
            missing.append("a negative value")
        if missing:
            raise ValueError(f"Grid lacks {', '.join(missing)}")

    @property
    def ordinary(self) -> "Grid":
        """The ordinary values of this grid."""
        return Grid(
            tuple(v for v in self.values if not isinstance(v, Peripheral)),
            exhaustive=False,
        )


DEFAULT_GRID = Grid(
    (
        BOT,
        Fraction(-2),
        Fraction(-1),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(1, 2),
        Fraction(1),
        Fraction(2),
    )
)
SIGNED_GRID = Grid(DEFAULT_GRID.values + (POS_INF, NEG_INF))


class Expectation(str, Enum):
    """Whether a check asserts an identity or looks for a witness of its failure."""

    HOLDS = "holds"
    DIFFERS = "differs"


@dataclass(frozen=True)
class Counterexample:
    """An assignment together with the two values it produced."""

    assignment: dict[str, MeadowValue]
    lhs: MeadowValue
    rhs: MeadowValue

    def to_dict(self) -> dict:
        return {
            "assignment": {k: format_value(v) for k, v in self.assignment.items()},
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
        }

    def __str__(self) -> str:
        where = ", ".join(f"{k}={format_value(v)}" for k, v in self.assignment.items())
        values = f"{format_value(self.lhs)} vs {format_value(self.rhs)}"
        return f"{values} at {where}" if where else values


@dataclass
class Verdict:
    """Result of one check.

    Attributes:
        name: Human readable name of the check.
        passed: Whether the check met its expectation.
        expectation: Identity or must-differ check.
        checked: Number of assignments or cases examined.
        counterexample: The disagreeing case; for a failing identity the
            refutation, for a passing must-differ check the witness.
        error: Evaluation error that aborted the check.
        note: Free-form remark.
        suite: Suite that produced the verdict.
    """

    name: str
    passed: bool
    expectation: Expectation = Expectation.HOLDS
    checked: int = 0
    counterexample: Counterexample | None = None
    error: str | None = None
    note: str | None = None
    suite: str | None = None

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "passed": self.passed,
            "expectation": self.expectation.value,
            "checked": self.checked,
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "error": self.error,
            "note": self.note,
        }

    def detail(self) -> str:
        """One-line explanation for renderers."""
        parts = []
        if self.counterexample is not None:
            parts.append(str(self.counterexample))
        if self.error:
            parts.append(self.error)
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)


def values_agree(a: MeadowValue, b: MeadowValue, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """Peripheral patterns first, then exact or tolerant numeric equality."""
    if isinstance(a, Peripheral) or isinstance(b, Peripheral):
        return a is b
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=tolerance, abs_tol=tolerance)


def _evaluate_pair(
    t1: Term, t2: Term, env: Environment, mode: Mode, carrier: Carrier
) -> tuple[MeadowValue, MeadowValue]:
    try:
        return evaluate(t1, env, mode, carrier), evaluate(t2, env, mode, carrier)
    except InexactError:
        if carrier is not Carrier.EXACT:
            raise
    return (
        evaluate(t1, env, mode, Carrier.APPROX),
        evaluate(t2, env, mode, Carrier.APPROX),
    )


def equiv(
    t1: Term,
    t2: Term,
    variables: Sequence[str] | None = None,
    grid: Grid = DEFAULT_GRID,
    mode: Mode = Mode.BOTTOM,
    carrier: Carrier = Carrier.EXACT,
    tolerance: float = DEFAULT_TOLERANCE,
    *,
    name: str | None = None,
    expect: Expectation = Expectation.HOLDS,
    env: Environment = EMPTY_ENVIRONMENT,
) -> Verdict:
    """Compare two terms at every assignment of grid values to ``variables``.

    On the exact carrier an assignment at which ``log2`` has no rational
    value is re-evaluated on the approximate carrier.

    Args:
        t1: Left-hand term.
        t2: Right-hand term.
        variables: Variables to enumerate; all free variables by default.
        grid: Values to draw from.
        mode: Semantic mode.
        carrier: Preferred carrier.
        tolerance: Relative and absolute tolerance for approximate values.
        name: Verdict name; ``"t1 = t2"`` by default.
        expect: ``HOLDS`` passes on agreement everywhere, ``DIFFERS``
            passes when some assignment disagrees.
        env: Base environment, e.g. bindings for function variables.

    Returns:
        The verdict. Evaluation errors produce a failing verdict.

    Raises:
        ValueError: If a free variable of either term is not enumerated.
    """
    free = free_variables(t1) | free_variables(t2)
    names = sorted(free) if variables is None else list(variables)
    unbound = free - set(names)
    if unbound:
        raise ValueError(f"Variables not enumerated: {', '.join(sorted(unbound))}")
    if name is None:
        name = f"{to_text(t1)} = {to_text(t2)}"

    checked = 0
    for values in itertools.product(grid.values, repeat=len(names)):
        assignment = dict(zip(names, values))
        try:
            lhs, rhs = _evaluate_pair(t1, t2, env.bind(**assignment), mode, carrier)
        except MeadowError as e:
            where = ", ".join(f"{k}={format_value(v)}" for k, v in assignment.items())
            logger.debug("Check %s aborted: %s", name, e)
            return Verdict(
                name,
                passed=False,
                expectation=expect,
                checked=checked,
                error=f"{e} (at {where or 'no assignment'})",
            )
        checked += 1
        if not values_agree(lhs, rhs, tolerance):
            witness = Counterexample(assignment, lhs, rhs)
            return Verdict(
                name,
                passed=expect is Expectation.DIFFERS,
                expectation=expect,
                checked=checked,
                counterexample=witness,
            )
    return Verdict(
        name,
        passed=expect is Expectation.HOLDS,
        expectation=expect,
        checked=checked,
        note=None if expect is Expectation.HOLDS else "no disagreeing assignment",
    )
