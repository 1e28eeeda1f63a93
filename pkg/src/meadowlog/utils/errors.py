"""Custom exception hierarchy for meadowlog.

Errors signal misuse of the library or the CLI. They are never used to
represent the peripheral value ``bot``, which is an ordinary result of
the algebra.
"""

from typing import Any


class MeadowError(Exception):
    """Base exception for all meadowlog errors."""

    pass


class TermError(MeadowError):
    """Term construction, parsing and signature errors."""

    pass


class TermSyntaxError(TermError):
    """Term text does not conform to the grammar.

    Attributes:
        text: The text that failed to parse.
        position: Zero-based character offset of the offending token.
        expected: Token names the parser would have accepted.
    """

    def __init__(self, text: str, position: int, expected: list[str]) -> None:
        self.text = text
        self.position = position
        self.expected = expected
        expected_text = ", ".join(expected) if expected else "end of input"
        super().__init__(
            f"Syntax error at position {position} in '{text}': expected {expected_text}"
        )


class SignatureError(TermError):
    """A term uses an operator outside the allowed signature.

    Attributes:
        operator: Name of the offending operator.
    """

    def __init__(self, operator: str) -> None:
        self.operator = operator
        super().__init__(f"Operator '{operator}' is not in the signature")


class IllegalLiteralError(TermError):
    """A peripheral literal appears where it is not allowed.

    Attributes:
        literal: Textual form of the literal.
        context: Where it was encountered.
    """

    def __init__(self, literal: str, context: str) -> None:
        self.literal = literal
        self.context = context
        super().__init__(f"Literal '{literal}' is not allowed in {context}")


class EvaluationError(MeadowError):
    """Errors raised while evaluating values or terms."""

    pass


class UnboundSymbolError(EvaluationError):
    """A variable, function variable or label has no binding.

    Attributes:
        symbol: The unbound symbol as written in the term.
    """

    def __init__(self, symbol: str) -> None:
        self.symbol = symbol
        super().__init__(f"Unbound symbol: {symbol}")


class InexactError(EvaluationError):
    """The exact carrier cannot represent a log2 result.

    Attributes:
        value: The argument whose logarithm is irrational.
    """

    def __init__(self, value: Any) -> None:
        self.value = value
        super().__init__(
            f"log2({value}) is not a rational number; use the approx carrier"
        )


class BottomLiteralError(EvaluationError):
    """The ``bot`` literal was evaluated in Suppes-Ono mode."""

    def __init__(self) -> None:
        super().__init__("Literal 'bot' has no meaning in suppes mode")


class IllegalValueError(EvaluationError):
    """A value is not legal for the selected mode.

    Attributes:
        value: The offending value.
        mode: The mode name.
    """

    def __init__(self, value: Any, mode: str) -> None:
        self.value = value
        self.mode = mode
        super().__init__(f"Value {value} is not legal in {mode} mode")


class CarrierOverflowError(EvaluationError):
    """An approximate operation left the finite floating range.

    Attributes:
        operation: Name of the operation.
    """

    def __init__(self, operation: str) -> None:
        self.operation = operation
        super().__init__(f"Approximate {operation} overflowed the floating range")


class MeasureError(MeadowError):
    """Probability mass function and measure errors."""

    pass


class PmfError(MeasureError):
    """Invalid probability mass function.

    Attributes:
        source: Where the weights came from (file path or "<weights>").
        errors: Validation messages.
    """

    def __init__(self, source: str, errors: list[str]) -> None:
        self.source = source
        self.errors = errors
        super().__init__(f"Invalid pmf {source}: {'; '.join(errors)}")


class LabelMismatchError(MeasureError):
    """Two pmfs are not over the same ordered labels.

    Attributes:
        left: Labels of the first pmf.
        right: Labels of the second pmf.
    """

    def __init__(self, left: list[str], right: list[str]) -> None:
        self.left = left
        self.right = right
        super().__init__(f"Label mismatch: {left} vs {right}")


class VariantError(MeasureError):
    """A term variant does not apply to the requested measure.

    Attributes:
        variant: The variant name.
        measure: The measure name.
    """

    def __init__(self, variant: str, measure: str) -> None:
        self.variant = variant
        self.measure = measure
        super().__init__(f"Variant '{variant}' does not apply to {measure}")


class EventError(MeadowError):
    """Event space errors."""

    pass


class ForeignLabelError(EventError):
    """An event mentions a label outside its space.

    Attributes:
        label: The unknown label.
    """

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f"Label '{label}' is not an outcome of the space")


class SpaceTooLargeError(EventError):
    """An event space has more outcomes than pairwise checks enumerate.

    Attributes:
        outcomes: Number of outcomes of the space.
        limit: Largest accepted number of outcomes.
    """

    def __init__(self, outcomes: int, limit: int) -> None:
        self.outcomes = outcomes
        self.limit = limit
        super().__init__(
            f"Space has {outcomes} outcomes; pairwise checks accept at most {limit}"
        )


class SuiteError(MeadowError):
    """Oracle suite errors."""

    pass


class UnknownSuiteError(SuiteError):
    """Requested suite is not registered.

    Attributes:
        name: The requested suite name.
        suggestions: Similar suite names.
    """

    def __init__(self, name: str, suggestions: list[str]) -> None:
        self.name = name
        self.suggestions = suggestions
        suggestion_text = ", ".join(suggestions) if suggestions else "none"
        super().__init__(f"Suite '{name}' not found. Did you mean: {suggestion_text}?")


class ConfigError(MeadowError):
    """Configuration-related errors."""

    pass
