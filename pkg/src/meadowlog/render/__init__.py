"""Output renderers: plain text, JSON and Rich."""

from meadowlog.render.base import Renderer
from meadowlog.render.json_renderer import JSONRenderer
from meadowlog.render.plain_renderer import PlainRenderer
from meadowlog.render.rich_renderer import RichRenderer

__all__ = ["JSONRenderer", "PlainRenderer", "Renderer", "RichRenderer"]
