"""Property tests for configuration loading.

Feature: meadowlog, Properties 31-33: Configuration
"""

import os
import tempfile
from pathlib import Path
from typing import Any

import pytest
import yaml
from hypothesis import given, settings
from hypothesis import strategies as st

from meadowlog.config import CONFIG_KEYS, ConfigLoader, MeadowConfig, OutputFormat
from meadowlog.core.values import Carrier, Mode
from meadowlog.utils.errors import ConfigError

output_format_strategy = st.sampled_from([f.value for f in OutputFormat])
mode_value_strategy = st.sampled_from([m.value for m in Mode])
carrier_value_strategy = st.sampled_from([c.value for c in Carrier])


@st.composite
def config_data_strategy(draw: st.DrawFn) -> dict[str, Any]:
    """Generate valid MeadowConfig data."""
    config: dict[str, Any] = {}
    if draw(st.booleans()):
        config["default_output"] = draw(output_format_strategy)
    if draw(st.booleans()):
        config["default_mode"] = draw(mode_value_strategy)
    if draw(st.booleans()):
        config["default_carrier"] = draw(carrier_value_strategy)
    if draw(st.booleans()):
        config["seed"] = draw(st.integers(min_value=0, max_value=10**6))
    if draw(st.booleans()):
        config["term_count"] = draw(st.integers(min_value=1, max_value=5000))
    if draw(st.booleans()):
        config["max_depth"] = draw(st.integers(min_value=1, max_value=6))
    if draw(st.booleans()):
        config["debug_mode"] = draw(st.booleans())
    return config


@given(config_data=config_data_strategy())
@settings(max_examples=100)
def test_config_loading_from_file(config_data: dict[str, Any]) -> None:
    """Property 31: Config Loading.

    Feature: meadowlog, Property 31: Config Loading
    Every value in a valid config file is applied.
    """
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "config.yaml"
        with open(config_path, "w", encoding="utf-8") as f:
            yaml.dump(config_data, f)

        config = ConfigLoader(config_path=config_path).load()

        assert isinstance(config, MeadowConfig)
        dumped = config.model_dump(mode="json")
        for key, value in config_data.items():
            assert dumped[key] == value


@given(mode=mode_value_strategy, term_count=st.integers(min_value=1, max_value=999))
@settings(max_examples=50)
def test_environment_variable_override(mode: str, term_count: int) -> None:
    """Property 32: Environment Variable Override.

    Feature: meadowlog, Property 32: Environment Variable Override
    A MEADOWLOG_ environment variable overrides the config file.
    """
    original_env = {
        "MEADOWLOG_DEFAULT_MODE": os.environ.get("MEADOWLOG_DEFAULT_MODE"),
        "MEADOWLOG_TERM_COUNT": os.environ.get("MEADOWLOG_TERM_COUNT"),
    }

    try:
        os.environ["MEADOWLOG_DEFAULT_MODE"] = mode.upper()
        os.environ["MEADOWLOG_TERM_COUNT"] = str(term_count)

        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "config.yaml"
            file_config = {
                "default_mode": "bot" if mode != "bot" else "signed",
                "term_count": term_count + 1,
            }
            with open(config_path, "w", encoding="utf-8") as f:
                yaml.dump(file_config, f)

            config = ConfigLoader(config_path=config_path).load()

            assert config.default_mode.value == mode
            assert config.term_count == term_count
    finally:
        for key, value in original_env.items():
            if value is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = value


def test_config_defaults_when_no_file() -> None:
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "nonexistent" / "config.yaml"
        config = ConfigLoader(config_path=config_path).load()

        assert config.default_output == OutputFormat.RICH
        assert config.default_mode == Mode.BOTTOM
        assert config.default_carrier == Carrier.APPROX
        assert config.term_count == 1000
        assert config.debug_mode is False


def test_invalid_file_falls_back_to_defaults() -> None:
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "config.yaml"
        config_path.write_text("max_depth: 99\n", encoding="utf-8")
        assert ConfigLoader(config_path=config_path).load().max_depth == 4


class TestSetAndGet:
    """Property 33: Config Persistence.

    Feature: meadowlog, Property 33: Config Persistence
    """

    def test_set_persists_and_converts(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            config_path = Path(tmpdir) / "sub" / "config.yaml"
            loader = ConfigLoader(config_path=config_path)

            loader.set("default_mode", "SIGNED")
            loader.set("tolerance", "1e-6")
            loader.set("debug_mode", "yes")

            assert loader.get("default_mode") == "signed"
            assert loader.get("tolerance") == 1e-6
            assert loader.get("debug_mode") is True
            stored = yaml.safe_load(config_path.read_text(encoding="utf-8"))
            assert stored == {"default_mode": "signed", "tolerance": 1e-6, "debug_mode": True}

    @pytest.mark.parametrize(
        "key, value",
        [("default_mode", "cubic"), ("max_depth", "9"), ("term_count", "many"), ("tolerance", "0")],
    )
    def test_set_rejects_invalid_values(self, key: str, value: str) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            loader = ConfigLoader(config_path=Path(tmpdir) / "config.yaml")
            with pytest.raises(ConfigError):
                loader.set(key, value)

    def test_set_suggests_keys(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            loader = ConfigLoader(config_path=Path(tmpdir) / "config.yaml")
            with pytest.raises(ConfigError, match="default_mode"):
                loader.set("default_mod", "bot")

    def test_get_unknown_key(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            loader = ConfigLoader(config_path=Path(tmpdir) / "config.yaml")
            with pytest.raises(KeyError):
                loader.get("theme")

    def test_show_lists_every_key(self) -> None:
        with tempfile.TemporaryDirectory() as tmpdir:
            loader = ConfigLoader(config_path=Path(tmpdir) / "config.yaml")
            assert set(loader.show()) == set(CONFIG_KEYS)


def test_config_property_caching() -> None:
    with tempfile.TemporaryDirectory() as tmpdir:
        config_path = Path(tmpdir) / "config.yaml"
        with open(config_path, "w", encoding="utf-8") as f:
            yaml.dump({"debug_mode": True}, f)

        loader = ConfigLoader(config_path=config_path)
        config1 = loader.config
        assert config1.debug_mode is True
        assert loader.config is config1
