"""Tests for item_reducer exception classes."""

from item_reducer.exceptions import (
    ItemReducerError,
    ConfigurationError,
    ValidationError,
    ComputationError,
    # Ingest exceptions
    DatasetLoadError,
    DatasetParseError,
    NonBinaryLabelError,
    MissingCellError,
    LoadingsLoadError,
    # Input exceptions
    LengthMismatchError,
    DegenerateLabelsError,
    InvalidLabelError,
    UnknownItemError,
    SubsetViolationError,
    InvalidGeneratorSpecError,
)


def test_item_reducer_error():
    """Test ItemReducerError exception."""
    error = ItemReducerError("error")
    assert str(error) == "error"
    assert isinstance(error, Exception)


def test_configuration_error():
    """Test ConfigurationError exception."""
    error = ConfigurationError("error")
    assert str(error) == "error"
    assert isinstance(error, ItemReducerError)


def test_computation_error():
    """Test ComputationError exception."""
    error = ComputationError("undefined")
    assert str(error) == "undefined"
    assert isinstance(error, ItemReducerError)


def test_length_mismatch_error() -> None:
    """Test LengthMismatchError carries both lengths."""
    error = LengthMismatchError(3, 2)
    assert "3 and 2" in str(error)
    assert (error.n_scores, error.n_labels) == (3, 2)
    assert isinstance(error, ValidationError)


def test_degenerate_labels_error() -> None:
    """Test DegenerateLabelsError carries both class counts."""
    error = DegenerateLabelsError(5, 0)
    assert "5 positive and 0 negative" in str(error)
    assert (error.n_positive, error.n_negative) == (5, 0)
    assert isinstance(error, ValidationError)


def test_invalid_label_error() -> None:
    """Test InvalidLabelError exception."""
    assert isinstance(InvalidLabelError("bad"), ValidationError)


def test_dataset_load_error_location() -> None:
    """Test that row and column are appended to the message."""
    error = DatasetLoadError("bad cell", row=4, column="q2")
    assert str(error) == "bad cell (at row 4, column q2)"
    assert error.row == 4
    assert error.column == "q2"


def test_dataset_load_error_without_location() -> None:
    """Test the message when no location is known."""
    error = DatasetLoadError("empty")
    assert str(error) == "empty"
    assert error.row is None


def test_dataset_load_error_hierarchy() -> None:
    """Test that specific load errors are DatasetLoadErrors."""
    for error_class in (DatasetParseError, NonBinaryLabelError, MissingCellError):
        error = error_class("x", row=2)
        assert isinstance(error, DatasetLoadError)
        assert "row 2" in str(error)


def test_loadings_load_error() -> None:
    """Test LoadingsLoadError exception."""
    assert isinstance(LoadingsLoadError("bad"), ItemReducerError)


def test_domain_validation_errors() -> None:
    """Test that domain errors are ValidationErrors."""
    for error_class in (UnknownItemError, SubsetViolationError, InvalidGeneratorSpecError):
        assert isinstance(error_class("x"), ValidationError)
