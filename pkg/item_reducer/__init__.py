"""
Item Reducer - AUC-driven item reduction for binary-outcome rating scales

Ranks the items of a questionnaire by their individual AUC against a binary
outcome, traces the AUC of the running total as items are added best-first,
and keeps the shortest prefix at the peak of that curve.
"""

__version__ = "1.0.0"

# Configuration and exceptions
from .config import config
from .exceptions import (
    ItemReducerError,
    ConfigurationError,
    ValidationError,
    DatasetLoadError,
    ComputationError,
)

__all__ = [
    "config",
    "ItemReducerError",
    "ConfigurationError",
    "ValidationError",
    "DatasetLoadError",
    "ComputationError",
]
