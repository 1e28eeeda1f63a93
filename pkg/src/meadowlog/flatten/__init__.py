"""Fracterm flattening."""

from meadowlog.flatten.flattener import flatten
from meadowlog.flatten.rules import FLATTEN_RULES, RULES, FlatFracterm, FlattenRule, is_plain

__all__ = ["FLATTEN_RULES", "RULES", "FlatFracterm", "FlattenRule", "flatten", "is_plain"]
