"""Probability mass functions with exact rational weights."""

import itertools
from collections.abc import Iterator, Sequence
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from meadowlog.utils.errors import LabelMismatchError, PmfError

QUARTER_WEIGHTS: tuple[Fraction, ...] = tuple(Fraction(k, 4) for k in range(5))


def parse_weight(value: Any) -> Fraction:
    """Read a weight given as ``a/b``, an integer, a decimal or a number.

    Raises:
        ValueError: If the value is not a rational number.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a weight: {value!r}")
    if isinstance(value, (int, float)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not a rational weight: {value!r}") from e


class Pmf(BaseModel):
    """A probability mass function on a finite, ordered sample space.

    Attributes:
        entries: ``(label, weight)`` pairs in enumeration order.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    entries: tuple[tuple[str, Fraction], ...]

    @field_validator("entries", mode="before")
    @classmethod
    def _exact_weights(cls, value: Any) -> Any:
        if isinstance(value, dict):
            value = list(value.items())
        return tuple((str(label), parse_weight(weight)) for label, weight in value)

    @model_validator(mode="after")
    def _check_distribution(self) -> "Pmf":
        if not self.entries:
            raise ValueError("a pmf needs at least one outcome")
        labels = [label for label, _ in self.entries]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ValueError(f"duplicate labels: {', '.join(duplicates)}")
        negative = [label for label, weight in self.entries if weight < 0]
        if negative:
            raise ValueError(f"negative weights for: {', '.join(negative)}")
        total = sum((weight for _, weight in self.entries), Fraction(0))
        if total != 1:
            raise ValueError(f"weights sum to {total}, not 1")
        return self

    @classmethod
    def from_weights(
        cls,
        weights: Sequence[Any],
        labels: Sequence[str] | None = None,
        source: str = "<weights>",
    ) -> "Pmf":
        """Build a pmf, labelling outcomes ``x1 .. xn`` unless labels are given.

        Raises:
            PmfError: If the weights do not form a distribution.
        """
        if labels is None:
            labels = [f"x{i}" for i in range(1, len(weights) + 1)]
        if len(labels) != len(weights):
            raise PmfError(source, [f"{len(labels)} labels for {len(weights)} weights"])
        try:
            return cls(entries=tuple(zip(labels, weights)))
        except ValidationError as e:
            raise PmfError(source, [err["msg"] for err in e.errors()]) from e

    @classmethod
    def uniform(cls, n: int) -> "Pmf":
        return cls.from_weights([Fraction(1, n)] * n)

    @classmethod
    def mixture(cls, p: "Pmf", q: "Pmf") -> "Pmf":
        """The midpoint distribution ``(p + q) / 2`` over the shared labels."""
        p.require_same_labels(q)
        return cls(
            entries=tuple(
                (label, (a + b) / 2) for (label, a), b in zip(p.entries, q.weights)
            )
        )

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.entries]

    @property
    def weights(self) -> list[Fraction]:
        return [weight for _, weight in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def weight(self, label: str) -> Fraction:
        for entry_label, weight in self.entries:
            if entry_label == label:
                return weight
        raise KeyError(label)

    def support(self) -> list[str]:
        return [label for label, weight in self.entries if weight != 0]

    def permuted(self, order: Sequence[int]) -> "Pmf":
        """Re-enumerate the outcomes; ``order[i]`` is the old index of new outcome ``i``."""
        return Pmf(entries=tuple(self.entries[i] for i in order))

    def require_same_labels(self, other: "Pmf") -> None:
        """Raise :class:`LabelMismatchError` unless both pmfs enumerate the same labels."""
        if self.labels != other.labels:
            raise LabelMismatchError(self.labels, other.labels)

    def __str__(self) -> str:
        return ", ".join(f"{label}={weight}" for label, weight in self.entries)


def pmf_grid(n: int, weights: Sequence[Fraction] = QUARTER_WEIGHTS) -> Iterator[Pmf]:
    """Every pmf on ``n`` outcomes whose weights are drawn from ``weights``.

    Outcomes are labelled ``x1 .. xn``; pmfs are produced in lexicographic
    order of their weight vectors.
    """
    labels = [f"x{i}" for i in range(1, n + 1)]
    for combo in itertools.product(weights, repeat=n):
        if sum(combo, Fraction(0)) == 1:
            yield Pmf(entries=tuple(zip(labels, combo)))
