"""Information measure commands for the meadowlog CLI.

Each command reads probability mass functions from TSV files and either
computes the measure directly or evaluates one of its term forms.
"""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Optional

import typer

from meadowlog.cli.app import emit, state
from meadowlog.cli.error_handlers import display_unexpected_error, handle_meadow_error
from meadowlog.cli.options import CARRIER_OPTION, MODE_OPTION, resolve_carrier, resolve_mode
from meadowlog.core.values import Carrier, MeadowValue, Mode, format_value
from meadowlog.engine.evaluator import evaluate
from meadowlog.measures import direct
from meadowlog.measures.builders import (
    MeasureVariant,
    build_cross_entropy_term,
    build_entropy_term,
    build_js_term,
    build_kl_term,
    sample_environment,
)
from meadowlog.measures.loader import load_pmf
from meadowlog.measures.pmf import Pmf
from meadowlog.terms.ast import Term
from meadowlog.terms.printer import to_text
from meadowlog.utils.errors import MeadowError, VariantError

logger = logging.getLogger(__name__)

P_ARGUMENT = typer.Argument(..., help="TSV file with label<TAB>weight lines for P.")
Q_ARGUMENT = typer.Argument(..., help="TSV file with label<TAB>weight lines for Q.")
VARIANT_OPTION = typer.Option(
    MeasureVariant.DIRECT,
    "--variant",
    case_sensitive=False,
    help="Compute directly or evaluate the named term form.",
)
SHOW_TERM_OPTION = typer.Option(False, "--show-term", help="Also print the term form.")


def _kl_term(n: int, variant: MeasureVariant) -> Term:
    if variant is not MeasureVariant.SEQMUL:
        raise VariantError(variant.value, "KL divergence")
    return build_kl_term(n)


def _js_term(n: int, variant: MeasureVariant) -> Term:
    if variant is not MeasureVariant.SEQMUL:
        raise VariantError(variant.value, "JS divergence")
    return build_js_term(n)


def _run_measure(
    measure: str,
    p_path: Path,
    q_path: Optional[Path],
    variant: MeasureVariant,
    mode: Optional[Mode],
    carrier: Optional[Carrier],
    show_term: bool,
    compute: Callable[..., MeadowValue],
    build: Callable[[int, MeasureVariant], Term],
) -> None:
    mode = resolve_mode(mode)
    carrier = resolve_carrier(carrier)

    try:
        p = load_pmf(p_path)
        q: Pmf | None = load_pmf(q_path) if q_path is not None else None
        pmfs = (p,) if q is None else (p, q)
        if q is not None:
            p.require_same_labels(q)

        # the direct computation shows the seqmul form as its defining term
        shown = MeasureVariant.SEQMUL if variant is MeasureVariant.DIRECT else variant
        term = build(len(p), shown) if show_term or variant is not MeasureVariant.DIRECT else None

        if variant is MeasureVariant.DIRECT:
            value = compute(*pmfs, carrier=carrier, mode=mode)
        else:
            value = evaluate(term, sample_environment(p, q), mode, carrier)
        logger.debug(
            "%s via %s in %s/%s = %s", measure, variant.value, mode.value, carrier.value, value
        )

        emit(
            {
                "measure": measure,
                "value": format_value(value),
                "variant": variant.value,
                "mode": mode.value,
                "carrier": carrier.value,
                "term": to_text(term) if show_term and term is not None else None,
            },
            "measure",
        )
    except MeadowError as e:
        raise typer.Exit(handle_meadow_error(e, state.err_console, state.json))
    except Exception as e:
        display_unexpected_error(e, state.err_console, state.json, state.debug)
        raise typer.Exit(1)


def entropy_command(
    p: Path = P_ARGUMENT,
    variant: MeasureVariant = VARIANT_OPTION,
    mode: Optional[Mode] = MODE_OPTION,
    carrier: Optional[Carrier] = CARRIER_OPTION,
    show_term: bool = SHOW_TERM_OPTION,
) -> None:
    """Entropy H(P) in bits.

    [dim]Variants:[/dim] direct, seqmul, seqmul_div, composite_f, sign_chain
    """
    _run_measure(
        "entropy", p, None, variant, mode, carrier, show_term, direct.entropy, build_entropy_term
    )


def crossentropy_command(
    p: Path = P_ARGUMENT,
    q: Path = Q_ARGUMENT,
    variant: MeasureVariant = VARIANT_OPTION,
    mode: Optional[Mode] = MODE_OPTION,
    carrier: Optional[Carrier] = CARRIER_OPTION,
    show_term: bool = SHOW_TERM_OPTION,
) -> None:
    """Cross-entropy CE(P, Q) in bits; bot when Q misses mass of P.

    [dim]Variants:[/dim] direct, seqmul, seqmul_div, sign_chain, f_xy, f_xy_sign
    """
    _run_measure(
        "cross-entropy",
        p,
        q,
        variant,
        mode,
        carrier,
        show_term,
        direct.cross_entropy,
        build_cross_entropy_term,
    )


def kl_command(
    p: Path = P_ARGUMENT,
    q: Path = Q_ARGUMENT,
    variant: MeasureVariant = VARIANT_OPTION,
    mode: Optional[Mode] = MODE_OPTION,
    carrier: Optional[Carrier] = CARRIER_OPTION,
    show_term: bool = SHOW_TERM_OPTION,
) -> None:
    """Kullback-Leibler divergence KL(P, Q) in bits.

    [dim]Variants:[/dim] direct, seqmul
    """
    _run_measure(
        "KL divergence", p, q, variant, mode, carrier, show_term, direct.kl_divergence, _kl_term
    )


def js_command(
    p: Path = P_ARGUMENT,
    q: Path = Q_ARGUMENT,
    variant: MeasureVariant = VARIANT_OPTION,
    mode: Optional[Mode] = MODE_OPTION,
    carrier: Optional[Carrier] = CARRIER_OPTION,
    show_term: bool = SHOW_TERM_OPTION,
) -> None:
    """Jensen-Shannon divergence KL(P, M) + KL(Q, M) with M the even mixture.

    [dim]Variants:[/dim] direct, seqmul
    """
    _run_measure(
        "JS divergence", p, q, variant, mode, carrier, show_term, direct.js_divergence, _js_term
    )
