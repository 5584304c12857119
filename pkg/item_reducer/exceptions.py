"""
Centralized exceptions for the item_reducer application.

This module re-exports all exceptions from their respective modules
to provide a single import point for all application exceptions.
"""

# Ingest exceptions
from data_io.exceptions import (
    DatasetLoadError,
    DatasetParseError,
    NonBinaryLabelError,
    OutOfRangeResponseError,
    MissingCellError,
    LoadingsLoadError,
)

# General errors
from utils.errors import (
    ItemReducerError,
    ConfigurationError,
    ValidationError,
    LengthMismatchError,
    InvalidLabelError,
    NonFiniteScoreError,
    DegenerateLabelsError,
    ComputationError,
)


class InvalidCurveError(ValidationError):
    """Raised when a ROC curve violates its endpoint or monotonicity rules."""


class InvalidAucError(ValidationError):
    """Raised when an AUC value lies outside [0, 1]."""


class UnknownItemError(ValidationError):
    """Raised when an ordering names an item the dataset does not have."""


class DuplicateItemError(ValidationError):
    """Raised when an ordering names the same item twice."""


class EmptyLoadingSetError(ValidationError):
    """Raised when reliability is requested for zero loadings."""


class InvalidLoadingError(ValidationError):
    """Raised when a standardized loading has magnitude above 1."""


class NegativeErrorVarianceError(ValidationError):
    """Raised when an error variance is negative."""


class SubsetViolationError(ValidationError):
    """Raised when the reduced loading set names items absent from the full set."""


class InvalidGeneratorSpecError(ValidationError):
    """Raised when a synthetic data generator spec is invalid."""


__all__ = [
    # Ingest exceptions
    'DatasetLoadError',
    'DatasetParseError',
    'NonBinaryLabelError',
    'OutOfRangeResponseError',
    'MissingCellError',
    'LoadingsLoadError',
    # General errors
    'ItemReducerError',
    'ConfigurationError',
    'ValidationError',
    'LengthMismatchError',
    'InvalidLabelError',
    'NonFiniteScoreError',
    'DegenerateLabelsError',
    'ComputationError',
    # Domain errors
    'InvalidCurveError',
    'InvalidAucError',
    'UnknownItemError',
    'DuplicateItemError',
    'EmptyLoadingSetError',
    'InvalidLoadingError',
    'NegativeErrorVarianceError',
    'SubsetViolationError',
    'InvalidGeneratorSpecError',
]
