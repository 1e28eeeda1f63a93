"""Loader for pmf files.

A pmf file holds one ``<label>\\t<weight>`` line per outcome in enumeration
order. Blank lines and lines starting with ``#`` are skipped. Weights are
written as ``a/b``, integers or terminating decimals.
"""

import logging
from pathlib import Path

from meadowlog.measures.pmf import Pmf, parse_weight
from meadowlog.utils.errors import PmfError

logger = logging.getLogger(__name__)


def parse_pmf(text: str, source: str = "<text>") -> Pmf:
    """Parse pmf file content.

    Args:
        text: File content.
        source: Name used in error messages.

    Returns:
        The parsed pmf.

    Raises:
        PmfError: On malformed lines or weights that are not a distribution.
    """
    labels: list[str] = []
    weights: list = []
    errors: list[str] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t") if "\t" in line else line.split()
        if len(parts) != 2:
            errors.append(f"line {line_no}: expected '<label>\\t<weight>'")
            continue
        label, weight_text = parts[0].strip(), parts[1].strip()
        try:
            weights.append(parse_weight(weight_text))
        except ValueError:
            errors.append(f"line {line_no}: '{weight_text}' is not a rational weight")
            continue
        labels.append(label)

    if errors:
        raise PmfError(source, errors)
    if not labels:
        raise PmfError(source, ["no outcomes"])

    pmf = Pmf.from_weights(weights, labels, source=source)
    logger.debug("Loaded pmf from %s with %d outcomes", source, len(pmf))
    return pmf


def load_pmf(path: Path | str) -> Pmf:
    """Read a pmf file.

    Raises:
        PmfError: If the file cannot be read or does not hold a pmf.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PmfError(str(path), [f"cannot read file: {e.strerror or e}"]) from e
    return parse_pmf(text, source=str(path))
