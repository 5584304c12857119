"""
Item Reducer Error Classes (General/Shared)

This module defines general custom exceptions used throughout item_reducer.
"""


class ItemReducerError(Exception):
    """Base exception for item_reducer errors."""


class ConfigurationError(ItemReducerError):
    """Raised when there's a configuration error."""


class ValidationError(ItemReducerError):
    """Raised when an input violates a documented precondition."""


class LengthMismatchError(ValidationError):
    """Raised when scores and labels differ in length or are empty."""

    def __init__(self, n_scores: int, n_labels: int):
        super().__init__(
            f"scores and labels must have the same nonempty length, "
            f"got {n_scores} and {n_labels}")
        self.n_scores = n_scores
        self.n_labels = n_labels


class InvalidLabelError(ValidationError):
    """Raised when a label is not 0 or 1."""


class NonFiniteScoreError(ValidationError):
    """Raised when a score is NaN or infinite."""


class DegenerateLabelsError(ValidationError):
    """Raised when the labels contain only one class."""

    def __init__(self, n_positive: int, n_negative: int):
        super().__init__(
            f"need at least one positive and one negative label, "
            f"got {n_positive} positive and {n_negative} negative")
        self.n_positive = n_positive
        self.n_negative = n_negative


class ComputationError(ItemReducerError):
    """Raised when a computation cannot produce a defined value."""
