"""
Tests for the factor loadings reader.
"""

import json
from pathlib import Path
from typing import Callable

import pytest

from data_io.loadings_loader import load_loadings
from item_reducer.exceptions import LoadingsLoadError, NegativeErrorVarianceError

WriteText = Callable[[str, str], Path]


def test_delimited_with_header(write_text: WriteText) -> None:
    """Test a headered item,lambda file with derived error variances."""
    loadings = load_loadings(write_text("l.csv", "item,lambda\nV1,0.6\nV2,0.8\n"))

    assert loadings.item_ids == ["V1", "V2"]
    assert loadings.lambdas.tolist() == [0.6, 0.8]
    assert loadings.deltas.tolist() == pytest.approx([0.64, 0.36])


def test_delimited_without_header_with_deltas(write_text: WriteText) -> None:
    """Test a headerless file with explicit error variances."""
    loadings = load_loadings(write_text("l.csv", "V1,0.6,0.5\nV2,0.8,\n"))

    assert loadings.deltas.tolist() == pytest.approx([0.5, 0.36])


def test_tab_delimited(write_text: WriteText) -> None:
    """Test tab-separated loadings."""
    loadings = load_loadings(write_text("l.tsv", "V1\t0.7\n"), delimiter="\t")

    assert loadings.item_ids == ["V1"]


def test_json_document(write_text: WriteText) -> None:
    """Test the JSON document form."""
    document = {
        "standardized": False,
        "loadings": [{"item": "V1", "lambda": 1.4, "delta": 0.3}, {"item": "V2", "lambda": 0.5}],
    }

    loadings = load_loadings(write_text("l.json", json.dumps(document)))

    assert loadings.standardized is False
    assert loadings.lambdas.tolist() == [1.4, 0.5]


def test_json_list(write_text: WriteText) -> None:
    """Test the bare JSON list form."""
    loadings = load_loadings(write_text("l.json", '[{"item": "a", "lambda": 0.5}]'))

    assert loadings.item_ids == ["a"]
    assert loadings.standardized is True


def test_standardized_bound(write_text: WriteText) -> None:
    """Test that standardized loadings above 1 in magnitude are rejected."""
    with pytest.raises(LoadingsLoadError):
        load_loadings(write_text("l.csv", "V1,1.2,0.1\n"))


def test_unstandardized_override(write_text: WriteText) -> None:
    """Test that the caller can declare loadings unstandardized."""
    loadings = load_loadings(write_text("l.csv", "V1,1.2,0.1\n"), standardized=False)

    assert loadings.lambdas.tolist() == [1.2]


def test_unstandardized_needs_delta(write_text: WriteText) -> None:
    """Test that a derived error variance may not be negative."""
    with pytest.raises(LoadingsLoadError) as exc_info:
        load_loadings(write_text("l.csv", "V1,1.2\n"), standardized=False)

    assert isinstance(exc_info.value.__cause__, NegativeErrorVarianceError)


@pytest.mark.parametrize("content", ["V1,0.5\nV2,abc\n", "item,lambda\nV1,0.5\nV2,x\n"])
def test_non_numeric(write_text: WriteText, content: str) -> None:
    """Test that a non-numeric loading names its row."""
    with pytest.raises(LoadingsLoadError, match="row"):
        load_loadings(write_text("l.csv", content))


def test_duplicate_item(write_text: WriteText) -> None:
    """Test that repeated items are rejected."""
    with pytest.raises(LoadingsLoadError):
        load_loadings(write_text("l.csv", "V1,0.5\nV1,0.6\n"))


def test_wrong_column_count(write_text: WriteText) -> None:
    """Test that files need two or three columns."""
    with pytest.raises(LoadingsLoadError):
        load_loadings(write_text("l.csv", "V1,0.5,0.1,9\n"))


def test_malformed_json(write_text: WriteText) -> None:
    """Test that unparsable JSON is reported."""
    with pytest.raises(LoadingsLoadError):
        load_loadings(write_text("l.json", "{not json"))


def test_empty_file(write_text: WriteText) -> None:
    """Test that an empty file yields an empty loading set."""
    assert len(load_loadings(write_text("l.csv", ""))) == 0


@pytest.mark.parametrize("content", ["V1,\nV2,0.6\nV3,0.7\n", "1,abc\nV2,0.6\n"])
def test_bad_first_row_is_not_a_header(write_text: WriteText, content: str) -> None:
    """Test that a first row with a blank lambda or numeric id is read as data and rejected."""
    with pytest.raises(LoadingsLoadError, match="row 1"):
        load_loadings(write_text("l.csv", content))
