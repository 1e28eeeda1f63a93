"""
meadowlog - total arithmetic for information measures.

Common meadows with the peripheral value bot, a totalized log2, the
conditional and left-sequential multiplication; entropy and divergence
terms; fracterm flattening; and oracle suites that check the identities.
"""

__version__ = "0.1.0"
__app_name__ = "meadowlog"
__app_alias__ = "mlog"

from meadowlog.factory import create_renderer, get_config_loader, reset_singletons

__all__ = [
    "__version__",
    "__app_name__",
    "__app_alias__",
    "create_renderer",
    "get_config_loader",
    "reset_singletons",
]
