"""
Ingest-specific exceptions for item_reducer.
"""

from typing import Optional, Union

from utils.errors import ItemReducerError


class DatasetLoadError(ItemReducerError):
    """Raised when a delimited file cannot be turned into a valid Dataset.

    ``row`` is the 1-based line number in the file and ``column`` the 1-based
    column position or the header name, when known.
    """

    def __init__(
            self,
            message: str,
            row: Optional[int] = None,
            column: Optional[Union[int, str]] = None):
        location = []
        if row is not None:
            location.append(f"row {row}")
        if column is not None:
            location.append(f"column {column}")
        if location:
            message = f"{message} (at {', '.join(location)})"
        super().__init__(message)
        self.row = row
        self.column = column


class DatasetParseError(DatasetLoadError):
    """Raised when a cell or the file itself cannot be parsed."""


class NonBinaryLabelError(DatasetLoadError):
    """Raised when the label column holds a value other than 0 or 1."""


class OutOfRangeResponseError(DatasetLoadError):
    """Raised when an item response falls outside the declared range."""


class MissingCellError(DatasetLoadError):
    """Raised when a blank cell is found under the reject policy."""


class LoadingsLoadError(ItemReducerError):
    """Raised when a factor loadings file cannot be parsed."""
