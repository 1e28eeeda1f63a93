"""Factory functions for meadowlog component instantiation.

The CLI obtains its configuration and renderers from here so that tests
can swap the config file and reset shared state.
"""

from pathlib import Path
from typing import Optional

from rich.console import Console

from meadowlog.config.loader import ConfigLoader
from meadowlog.config.schema import OutputFormat
from meadowlog.render.base import Renderer
from meadowlog.render.json_renderer import JSONRenderer
from meadowlog.render.plain_renderer import PlainRenderer
from meadowlog.render.rich_renderer import RichRenderer

_config_loader: Optional[ConfigLoader] = None


def get_config_loader(config_path: Optional[Path] = None) -> ConfigLoader:
    """Get or create the ConfigLoader singleton.

    Args:
        config_path: Optional custom path to config file.

    Returns:
        ConfigLoader instance.
    """
    global _config_loader
    if _config_loader is None or config_path is not None:
        _config_loader = ConfigLoader(config_path)
    return _config_loader


def create_renderer(
    output_format: OutputFormat | str = OutputFormat.RICH,
    console: Optional[Console] = None,
) -> Renderer:
    """Create the renderer for an output format.

    Args:
        output_format: An `OutputFormat` or its name in any case.
        console: Console the Rich renderer captures through.

    Raises:
        ValueError: If the format is not rich, plain or json.
    """
    try:
        fmt = OutputFormat(output_format.lower())
    except ValueError:
        raise ValueError(f"Unknown output format: {output_format}") from None

    match fmt:
        case OutputFormat.RICH:
            return RichRenderer(console=console)
        case OutputFormat.PLAIN:
            return PlainRenderer()
        case OutputFormat.JSON:
            return JSONRenderer()


def reset_singletons() -> None:
    """Reset shared instances, e.g. after the configuration file changed."""
    global _config_loader
    _config_loader = None


__all__ = [
    "create_renderer",
    "get_config_loader",
    "reset_singletons",
]
