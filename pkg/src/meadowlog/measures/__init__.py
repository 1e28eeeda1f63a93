"""Probability mass functions, information measures and their term builders."""

from meadowlog.measures.builders import (
    CROSS_ENTROPY_VARIANTS,
    ENTROPY_VARIANTS,
    MeasureVariant,
    build_cross_entropy_term,
    build_entropy_term,
    build_js_term,
    build_kl_term,
    sample_environment,
)
from meadowlog.measures.direct import (
    cross_entropy,
    entropy,
    js_divergence,
    kl_divergence,
    seq_expected_value,
)
from meadowlog.measures.loader import load_pmf, parse_pmf
from meadowlog.measures.pmf import QUARTER_WEIGHTS, Pmf, parse_weight, pmf_grid

__all__ = [
    "CROSS_ENTROPY_VARIANTS",
    "ENTROPY_VARIANTS",
    "QUARTER_WEIGHTS",
    "MeasureVariant",
    "Pmf",
    "build_cross_entropy_term",
    "build_entropy_term",
    "build_js_term",
    "build_kl_term",
    "cross_entropy",
    "entropy",
    "js_divergence",
    "kl_divergence",
    "load_pmf",
    "parse_pmf",
    "parse_weight",
    "pmf_grid",
    "sample_environment",
]
