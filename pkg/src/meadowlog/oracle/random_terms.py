"""Seeded pseudo-random terms for soundness checks."""

import random
from collections.abc import Sequence
from fractions import Fraction

from meadowlog.terms.ast import (
    BOTTOM,
    FULL_SIGNATURE,
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
    sample_constants,
)

DEFAULT_VARIABLES = ("x", "y", "z")
LEAF_CONSTANTS = (Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))

_BUILDERS = {
    "add": (2, Add),
    "neg": (1, Neg),
    "mul": (2, Mul),
    "div": (2, Div),
    "log2": (1, Log2),
    "cond": (3, Cond),
    "seqmul": (2, SeqMul),
    "sign": (1, Sign),
}


def random_terms(
    seed: int,
    max_depth: int,
    signature: Signature = FULL_SIGNATURE,
    count: int = 1,
    variables: Sequence[str] = DEFAULT_VARIABLES,
) -> list[Term]:
    """Generate ``count`` terms over ``signature`` from a fixed seed.

    Leaves are variables, the constants ``0``, ``1``, ``2`` and ``1/2``,
    ``bot`` when the signature allows it, and applications of the
    signature's function variables. The root is an operator whenever
    ``max_depth`` is at least 2.

    Args:
        seed: Seed of the private random stream.
        max_depth: Largest depth of a produced term; a leaf has depth 1.
        signature: Operators and literals to draw from.
        count: Number of terms.
        variables: At most three variable names.

    Returns:
        The same list of terms for the same arguments.
    """
    if max_depth < 1:
        raise ValueError(f"max_depth must be at least 1, got {max_depth}")
    if len(variables) > 3:
        raise ValueError("At most three variables are supported")

    rng = random.Random(seed)
    operators = sorted(signature.operators)
    constants: list[Term] = [Const(c) for c in LEAF_CONSTANTS]
    if signature.allow_bottom:
        constants.append(BOTTOM)
    applications: list[Term] = [
        FunApp(function, label)
        for function in sorted(signature.function_variables)
        for label in sample_constants(signature.sample_count)
    ]

    def leaf() -> Term:
        roll = rng.random()
        if variables and roll < 0.55:
            return Var(rng.choice(list(variables)))
        if applications and roll < 0.7:
            return rng.choice(applications)
        return rng.choice(constants)

    def node(depth: int, root: bool = False) -> Term:
        if depth <= 1 or (not root and rng.random() < 0.3):
            return leaf()
        arity, build = _BUILDERS[rng.choice(operators)]
        return build(*(node(depth - 1) for _ in range(arity)))

    return [node(max_depth, root=True) for _ in range(count)]
