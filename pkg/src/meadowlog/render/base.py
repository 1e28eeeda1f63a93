"""Base protocol for renderers."""

from typing import Any, Protocol


class Renderer(Protocol):
    """Protocol for output rendering.

    Every template receives plain data: dictionaries and lists whose
    values are already in their textual forms.

    Templates:
        value: ``{"term", "value", "mode", "carrier"}`` of one evaluation.
        flatten: ``{"term", "flat", "numerator", "denominator"}``.
        measure: ``{"measure", "value", "variant", "mode", "carrier", "term"?}``.
        verdicts: A list of verdict dictionaries.
        bayes: A Bayes-Price report dictionary.
    """

    def render(self, data: Any, template: str) -> str:
        """Render data using the specified template.

        Args:
            data: The data to render.
            template: The template name.

        Returns:
            The rendered output as a string.
        """
        ...

    def supports_rich(self) -> bool:
        """Check if renderer supports Rich formatting."""
        ...
