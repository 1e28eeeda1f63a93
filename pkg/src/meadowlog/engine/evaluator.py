"""Compositional evaluation of terms in an environment."""

from collections.abc import Mapping
from dataclasses import dataclass, field

from meadowlog.core import operations as ops
from meadowlog.core.values import BOT, Carrier, MeadowValue, Mode, Peripheral, coerce
from meadowlog.terms.ast import (
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
    Var,
)
from meadowlog.utils.errors import (
    BottomLiteralError,
    IllegalLiteralError,
    UnboundSymbolError,
)


@dataclass(frozen=True)
class Environment:
    """Bindings for variables, function variables and sample labels.

    Attributes:
        variables: Variable name to value.
        functions: Function variable to a table from label to value.
        labels: Declared sample labels; inferred from ``functions`` when empty.

    Raises:
        UnboundSymbolError: If a function table misses a declared label.
    """

    variables: Mapping[str, MeadowValue] = field(default_factory=dict)
    functions: Mapping[str, Mapping[str, MeadowValue]] = field(default_factory=dict)
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if not self.labels and self.functions:
            seen: dict[str, None] = {}
            for table in self.functions.values():
                seen.update(dict.fromkeys(table))
            object.__setattr__(self, "labels", tuple(seen))
        for name, table in self.functions.items():
            for label in self.labels:
                if label not in table:
                    raise UnboundSymbolError(f"{name}({label})")

    def bind(self, **values: MeadowValue) -> "Environment":
        """Copy with additional variable bindings."""
        return Environment({**self.variables, **values}, self.functions, self.labels)


EMPTY_ENVIRONMENT = Environment()


def evaluate(
    term: Term,
    env: Environment = EMPTY_ENVIRONMENT,
    mode: Mode = Mode.BOTTOM,
    carrier: Carrier = Carrier.APPROX,
) -> MeadowValue:
    """Evaluate ``term`` bottom-up with the operations of ``mode``.

    Args:
        term: The term.
        env: Bindings for every free symbol of ``term``.
        mode: Semantic mode.
        carrier: Number backend.

    Returns:
        The value of the term.

    Raises:
        UnboundSymbolError: A variable or application has no binding.
        InexactError: An exact ``log2`` has an irrational result.
        BottomLiteralError: ``bot`` appears in Suppes-Ono mode.
        IllegalLiteralError: An infinity literal appears outside signed mode.
    """
    variables = {k: coerce(v, carrier) for k, v in env.variables.items()}
    functions = env.functions

    def value_of(t: Term) -> MeadowValue:
        match t:
            case Const(Peripheral() as p):
                if mode is Mode.SUPPES_ONO:
                    if p is BOT:
                        raise BottomLiteralError()
                    raise IllegalLiteralError(p.value, "suppes mode")
                if p is not BOT and mode is not Mode.SIGNED:
                    raise IllegalLiteralError(p.value, f"{mode.value} mode")
                return p
            case Const(value):
                return coerce(value, carrier)
            case Var(name):
                try:
                    return variables[name]
                except KeyError:
                    raise UnboundSymbolError(name) from None
            case FunApp(function, label):
                try:
                    return coerce(functions[function][label], carrier)
                except KeyError:
                    raise UnboundSymbolError(f"{function}({label})") from None
            case Add(l, r):
                return ops.add(value_of(l), value_of(r), mode)
            case Neg(operand):
                return ops.neg(value_of(operand), mode)
            case Mul(l, r):
                return ops.mul(value_of(l), value_of(r), mode)
            case Div(l, r):
                return ops.div(value_of(l), value_of(r), mode)
            case Log2(operand):
                return ops.log2(value_of(operand), mode, carrier)
            case Cond(x, y, z):
                return ops.cond(value_of(x), value_of(y), value_of(z), mode)
            case SeqMul(l, r):
                return ops.seqmul(value_of(l), value_of(r), mode)
            case Sign(operand):
                return ops.sign(value_of(operand), mode)
        raise TypeError(f"Not a term: {t!r}")

    return value_of(term)
