"""
Tests for the delimited dataset reader and writer.
"""

from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from data_io.dataset_loader import load_dataset, summarize, write_dataset
from data_models.dataset import Dataset
from data_models.run_config import IngestOptions, MissingPolicy
from item_reducer.exceptions import (
    DatasetLoadError,
    DatasetParseError,
    DegenerateLabelsError,
    MissingCellError,
    NonBinaryLabelError,
    OutOfRangeResponseError,
)
from utils.metrics import MetricDataPointName

WriteText = Callable[[str, str], Path]

HEADERED = "outcome,q1,q2,q3\n0,1,2,0\n1,3,2,1\n0,0,1,0\n1,2,3,3\n"
HEADERLESS = "0,1,2\n1,3,2\n0,0,1\n1,2,3\n"


class TestLoadDataset:
    """Test loading and validation."""

    def test_headered_file(self, write_text: WriteText) -> None:
        """Test that header names become item ids."""
        dataset = load_dataset(write_text("data.csv", HEADERED))

        assert dataset.item_ids == ("q1", "q2", "q3")
        assert list(dataset.labels) == [0, 1, 0, 1]
        assert dataset.items.tolist() == [[1, 2, 0], [3, 2, 1], [0, 1, 0], [2, 3, 3]]

    def test_headerless_file(self, write_text: WriteText) -> None:
        """Test that a numeric first row is data and ids default to V1..VK."""
        dataset = load_dataset(write_text("data.csv", HEADERLESS))

        assert dataset.n_respondents == 4
        assert dataset.item_ids == ("V1", "V2")

    def test_forced_no_header(self, write_text: WriteText) -> None:
        """Test that --no-header treats a non-numeric first row as a parse error."""
        with pytest.raises(DatasetParseError):
            load_dataset(write_text("data.csv", HEADERED), IngestOptions(has_header=False))

    def test_label_column_by_name(self, write_text: WriteText) -> None:
        """Test that the label column can be named."""
        content = "q1,outcome,q2\n1,0,2\n3,1,2\n0,0,1\n2,1,3\n"

        dataset = load_dataset(write_text("data.csv", content), IngestOptions(label_column="outcome"))

        assert dataset.item_ids == ("q1", "q2")
        assert list(dataset.labels) == [0, 1, 0, 1]

    def test_label_column_by_index(self, write_text: WriteText) -> None:
        """Test that the label column can be the last column."""
        content = "1,2,0\n3,2,1\n0,1,0\n2,3,1\n"

        dataset = load_dataset(write_text("data.csv", content), IngestOptions(label_column=2))

        assert list(dataset.labels) == [0, 1, 0, 1]
        assert dataset.items[:, 0].tolist() == [1, 3, 0, 2]

    def test_tab_delimiter(self, write_text: WriteText) -> None:
        """Test tab-separated input."""
        dataset = load_dataset(
            write_text("data.tsv", HEADERED.replace(",", "\t")), IngestOptions(delimiter="\t"))

        assert dataset.item_ids == ("q1", "q2", "q3")

    def test_non_binary_label_names_row(self, write_text: WriteText) -> None:
        """Test that a bad label reports its file line and column."""
        content = "outcome,q1\n0,1\n2,3\n1,0\n"

        with pytest.raises(NonBinaryLabelError) as exc_info:
            load_dataset(write_text("data.csv", content))

        assert exc_info.value.row == 3
        assert exc_info.value.column == "outcome"
        assert "row 3" in str(exc_info.value)

    def test_non_integer_cell(self, write_text: WriteText) -> None:
        """Test that a non-integer response is a parse error."""
        content = "outcome,q1\n0,1\n1,2.5\n"

        with pytest.raises(DatasetParseError) as exc_info:
            load_dataset(write_text("data.csv", content))

        assert exc_info.value.row == 3

    def test_integer_beyond_int64(self, write_text: WriteText) -> None:
        """Test that an integer too large for 64 bits is a parse error with its position."""
        content = "1,3\n0,99999999999999999999999\n1,2\n0,0\n"

        with pytest.raises(DatasetParseError) as exc_info:
            load_dataset(write_text("data.csv", content))

        assert exc_info.value.row == 2
        assert exc_info.value.column == 2
        assert "64-bit" in str(exc_info.value)

    @pytest.mark.parametrize("policy", [MissingPolicy.REJECT, MissingPolicy.DROP_ROW])
    def test_short_row(self, write_text: WriteText, policy: MissingPolicy) -> None:
        """Test that a row with too few fields is a parse error under every missing policy."""
        content = "1,3,0\n0,1\n1,2,1\n0,0,1\n"

        with pytest.raises(DatasetParseError) as exc_info:
            load_dataset(write_text("data.csv", content), IngestOptions(missing_policy=policy))

        assert exc_info.value.row == 2
        assert exc_info.value.column == 3
        assert "2 field(s), expected 3" in str(exc_info.value)

    def test_blank_cell_rejected(self, write_text: WriteText) -> None:
        """Test that blank cells are rejected by default."""
        content = "outcome,q1,q2\n0,1,2\n1,,2\n0,1,1\n1,3,3\n"

        with pytest.raises(MissingCellError) as exc_info:
            load_dataset(write_text("data.csv", content))

        assert exc_info.value.row == 3
        assert exc_info.value.column == "q1"

    def test_blank_cell_row_dropped(self, write_text: WriteText) -> None:
        """Test that the drop-row policy removes and counts incomplete rows."""
        content = "outcome,q1,q2\n0,1,2\n1,,2\n0,1,1\n1,3,3\n"

        dataset = load_dataset(
            write_text("data.csv", content), IngestOptions(missing_policy=MissingPolicy.DROP_ROW))

        assert dataset.n_respondents == 3
        assert dataset.dropped_rows == 1

    def test_declared_range(self, write_text: WriteText) -> None:
        """Test that responses outside a declared range are rejected."""
        with pytest.raises(OutOfRangeResponseError) as exc_info:
            load_dataset(write_text("data.csv", HEADERED), IngestOptions(response_range=(0, 2)))

        assert exc_info.value.row == 3
        assert exc_info.value.column == "q1"

    def test_negative_response(self, write_text: WriteText) -> None:
        """Test that negative responses are rejected without a declared range."""
        with pytest.raises(OutOfRangeResponseError):
            load_dataset(write_text("data.csv", "0,1\n1,-1\n"))

    def test_single_class(self, write_text: WriteText) -> None:
        """Test that one-class files fail to load with the class counts as cause."""
        with pytest.raises(DatasetLoadError) as exc_info:
            load_dataset(write_text("data.csv", "1,2\n1,3\n"))

        assert isinstance(exc_info.value.__cause__, DegenerateLabelsError)

    def test_empty_file(self, write_text: WriteText) -> None:
        """Test that an empty file is a parse error."""
        with pytest.raises(DatasetParseError):
            load_dataset(write_text("data.csv", ""))

    def test_header_only(self, write_text: WriteText) -> None:
        """Test that a file without data rows is a parse error."""
        with pytest.raises(DatasetParseError):
            load_dataset(write_text("data.csv", "outcome,q1\n"))

    def test_single_column(self, write_text: WriteText) -> None:
        """Test that a file needs at least one item column."""
        with pytest.raises(DatasetParseError):
            load_dataset(write_text("data.csv", "0\n1\n"))

    def test_label_name_without_header(self, write_text: WriteText) -> None:
        """Test that a named label column needs a header."""
        with pytest.raises(DatasetLoadError):
            load_dataset(write_text("data.csv", HEADERLESS), IngestOptions(label_column="outcome"))

    def test_missing_file(self, tmp_path: Path) -> None:
        """Test that a missing path raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_dataset(tmp_path / "absent.csv")

    def test_metrics(self, write_text: WriteText, mocker) -> None:
        """Test that successes and failures are counted."""
        inc = mocker.patch("data_io.dataset_loader.inc_counter_metric")

        load_dataset(write_text("good.csv", HEADERED))
        with pytest.raises(DatasetLoadError):
            load_dataset(write_text("bad.csv", "0,1\n2,1\n"))

        assert [c.args[0] for c in inc.call_args_list] == [
            MetricDataPointName.DATASET_LOAD_SUCCESS_COUNT,
            MetricDataPointName.DATASET_LOAD_ERROR_COUNT,
        ]


class TestWriteDataset:
    """Test writing datasets."""

    def test_round_trip(self, tmp_path: Path) -> None:
        """Test that a written dataset loads back unchanged."""
        dataset = Dataset(
            labels=np.array([0, 1, 1, 0]),
            items=np.array([[1, 0], [2, 3], [3, 3], [0, 1]]),
            item_ids=("a", "b"))
        path = tmp_path / "out.csv"

        write_dataset(dataset, path)

        assert path.read_text(encoding="utf-8").splitlines()[0] == "label,a,b"
        assert load_dataset(path) == dataset


class TestSummarize:
    """Test dataset summaries."""

    def test_counts(self, write_text: WriteText) -> None:
        """Test counts, prevalence and observed ranges."""
        summary = summarize(load_dataset(write_text("data.csv", HEADERED)))

        assert summary.respondents == 4
        assert summary.positives == 2
        assert summary.prevalence == 0.5
        assert summary.response_ranges == {"q1": (0, 3), "q2": (1, 3), "q3": (0, 3)}
        assert summary.to_dict()["negatives"] == 2
