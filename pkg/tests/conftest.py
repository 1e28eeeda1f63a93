"""Shared fixtures and strategies for meadowlog tests."""

import logging
import os
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from meadowlog.core.values import BOT, NEG_INF, POS_INF, Mode
from meadowlog.factory import reset_singletons
from meadowlog.measures.pmf import Pmf, pmf_grid
from meadowlog.terms.ast import Signature

# Small exact rationals, zero included
fraction_strategy = st.fractions(min_value=-8, max_value=8, max_denominator=8)

nonzero_fraction_strategy = fraction_strategy.filter(lambda v: v != 0)

# Values legal in bottom mode
bottom_value_strategy = st.one_of(st.just(BOT), fraction_strategy)

# Values legal in signed mode
signed_value_strategy = st.one_of(st.sampled_from([BOT, POS_INF, NEG_INF]), fraction_strategy)

mode_strategy = st.sampled_from(list(Mode))

seed_strategy = st.integers(min_value=0, max_value=2**32 - 1)

# Operators whose exact evaluation never needs a logarithm
RATIONAL_SIGNATURE = Signature(
    operators=frozenset({"add", "neg", "mul", "div", "cond", "seqmul", "sign"})
)

# Every pmf with one to three outcomes and quarter weights
GRID_PMFS: list[Pmf] = [pmf for n in (1, 2, 3) for pmf in pmf_grid(n)]

pmf_strategy = st.sampled_from(GRID_PMFS)


@st.composite
def pmf_pair_strategy(draw: st.DrawFn) -> tuple[Pmf, Pmf]:
    """Two gridded pmfs over the same outcomes."""
    n = draw(st.integers(min_value=1, max_value=3))
    same_size = [pmf for pmf in GRID_PMFS if len(pmf) == n]
    return draw(st.sampled_from(same_size)), draw(st.sampled_from(same_size))


@st.composite
def dyadic_pmf_strategy(draw: st.DrawFn) -> Pmf:
    """Pmfs whose weights are powers of two or zero, for the exact carrier."""
    dyadic = {Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)}
    candidates = [pmf for pmf in GRID_PMFS if set(pmf.weights) <= dyadic]
    return draw(st.sampled_from(candidates))


@pytest.fixture(autouse=True)
def reset_factory_singletons():
    """Reset factory singletons and debug logging before and after each test."""
    reset_singletons()
    yield
    reset_singletons()
    logger = logging.getLogger("meadowlog")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)


@pytest.fixture
def isolated_config(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """Point the config loader at an empty file location under tmp_path."""
    from meadowlog import factory

    config_path = tmp_path / "config.yaml"
    for key in list(os.environ):
        if key.startswith("MEADOWLOG_"):
            monkeypatch.delenv(key)
    factory.get_config_loader(config_path)
    return config_path


@pytest.fixture
def pmf_file(tmp_path: Path):
    """Write a pmf file from ``label -> weight`` text pairs."""

    def write(name: str, *lines: str) -> Path:
        path = tmp_path / name
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return write
