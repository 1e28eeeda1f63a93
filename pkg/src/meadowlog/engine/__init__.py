"""Term evaluation."""

from meadowlog.engine.evaluator import EMPTY_ENVIRONMENT, Environment, evaluate

__all__ = ["EMPTY_ENVIRONMENT", "Environment", "evaluate"]
