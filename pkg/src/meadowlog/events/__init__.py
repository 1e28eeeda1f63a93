"""Event spaces, conditional probability and the guarded Bayes-Price check."""

from meadowlog.events.space import (
    BAYES_MAX_OUTCOMES,
    BayesCase,
    BayesReport,
    Event,
    EventSpace,
    bayes_check,
    bayes_rhs,
    cond_prob,
    prob,
    space_grid,
)

__all__ = [
    "BAYES_MAX_OUTCOMES",
    "BayesCase",
    "BayesReport",
    "Event",
    "EventSpace",
    "bayes_check",
    "bayes_rhs",
    "cond_prob",
    "prob",
    "space_grid",
]
