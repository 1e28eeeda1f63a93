"""CLI module for meadowlog."""

from meadowlog.cli.app import app

__all__ = ["app"]
