"""
Delimited-text reader and writer for rating-scale datasets.

Layout: one row per respondent, the binary outcome in the label column
(first by default) and one column per item. A header row is optional.
"""

import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from data_io.exceptions import (
    DatasetLoadError,
    DatasetParseError,
    MissingCellError,
    NonBinaryLabelError,
    OutOfRangeResponseError,
)
from data_models.dataset import Dataset, DatasetSummary
from data_models.run_config import IngestOptions, MissingPolicy
from utils.errors import ItemReducerError
from utils.logging_config import get_logger
from utils.metric_helpers import inc_counter_metric
from utils.metrics import MetricDataPointName
from utils.performance_monitor import monitor_performance

LOGGER = get_logger(__name__)

PathLike = Union[str, Path]

DEFAULT_LABEL_NAME = "label"
INTEGER_PATTERN = r"[+-]?\d+"
INT64 = np.iinfo(np.int64)


def _is_integer(cell: str) -> bool:
    return re.fullmatch(INTEGER_PATTERN, cell) is not None


def _read_cells(path: PathLike, options: IngestOptions) -> pd.DataFrame:
    """Read every cell as stripped text, blank cells as ''."""
    try:
        frame = pd.read_csv(
            path,
            sep=options.delimiter,
            header=None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            encoding=options.encoding,
        )
    except pd.errors.EmptyDataError as e:
        raise DatasetParseError(f"{path} is empty") from e
    except (pd.errors.ParserError, UnicodeDecodeError, ValueError) as e:
        raise DatasetParseError(f"could not parse {path}: {e}") from e
    # Blank cells read as ''; NaN only pads a row with too few fields
    short = frame.isna().to_numpy()
    if short.any():
        row, column = np.argwhere(short)[0]
        raise DatasetParseError(
            f"row has {column} field(s), expected {frame.shape[1]}",
            row=int(row) + 1, column=int(column) + 1)
    return frame.apply(lambda column: column.str.strip())


def _resolve_label_column(label_column: Union[int, str], header: Optional[List[str]],
                          n_columns: int) -> int:
    if isinstance(label_column, int) or str(label_column).lstrip("-").isdigit():
        index = int(label_column)
        if not 0 <= index < n_columns:
            raise DatasetLoadError(
                f"label column index {index} is outside the file's {n_columns} columns")
        return index
    if header is None:
        raise DatasetLoadError(
            f"label column {label_column!r} given by name but the file has no header")
    if label_column not in header:
        raise DatasetLoadError(f"label column {label_column!r} not found in header {header}")
    return header.index(str(label_column))


def _parse_integer_column(
        cells: pd.Series, line_numbers: np.ndarray, column_name: Union[int, str]) -> np.ndarray:
    bad = ~cells.str.fullmatch(INTEGER_PATTERN).to_numpy(dtype=bool)
    if bad.any():
        position = int(np.flatnonzero(bad)[0])
        raise DatasetParseError(
            f"cell value {cells.iloc[position]!r} is not an integer",
            row=int(line_numbers[position]), column=column_name)
    overflow = np.array([not INT64.min <= int(cell) <= INT64.max for cell in cells], dtype=bool)
    if overflow.any():
        position = int(np.flatnonzero(overflow)[0])
        raise DatasetParseError(
            f"cell value {cells.iloc[position]!r} does not fit a 64-bit integer",
            row=int(line_numbers[position]), column=column_name)
    return cells.astype(np.int64).to_numpy()


@monitor_performance("load_dataset")
def load_dataset(path: PathLike, options: Optional[IngestOptions] = None) -> Dataset:
    """Load and validate a rating-scale dataset.

    Args:
        path: Delimited text file (UTF-8 by default).
        options: Delimiter, header flag, label column, missing-cell policy and
            optional declared response range.

    Returns:
        A validated, immutable Dataset.

    Raises:
        DatasetLoadError: Any parse or validation failure; subclasses carry the
            offending row (file line) and column.
        FileNotFoundError: If ``path`` does not exist.
    """
    options = options or IngestOptions()
    try:
        dataset = _load(path, options)
    except ItemReducerError:
        inc_counter_metric(MetricDataPointName.DATASET_LOAD_ERROR_COUNT)
        raise
    inc_counter_metric(MetricDataPointName.DATASET_LOAD_SUCCESS_COUNT)
    LOGGER.info(
        "Loaded %s: %d respondents, %d items, %d dropped rows",
        path, dataset.n_respondents, dataset.n_items, dataset.dropped_rows)
    return dataset


def _load(path: PathLike, options: IngestOptions) -> Dataset:
    cells = _read_cells(path, options)
    n_columns = cells.shape[1]
    if n_columns < 2:
        raise DatasetParseError(
            f"expected a label column and at least one item column, got {n_columns} column(s)")

    has_header = options.has_header
    if has_header is None:
        has_header = not all(_is_integer(cell) for cell in cells.iloc[0] if cell != "")
    header: Optional[List[str]] = None
    first_data_line = 1
    if has_header:
        header = [str(cell) for cell in cells.iloc[0]]
        cells = cells.iloc[1:].reset_index(drop=True)
        first_data_line = 2
    if cells.empty:
        raise DatasetParseError(f"{path} has no data rows")

    # Positions in the file, for error messages
    line_numbers = np.arange(first_data_line, first_data_line + len(cells))

    label_index = _resolve_label_column(options.label_column, header, n_columns)
    item_indices = [index for index in range(n_columns) if index != label_index]

    def column_name(index: int) -> Union[int, str]:
        return header[index] if header is not None else index + 1

    blank = (cells == "").to_numpy()
    if blank.any():
        if options.missing_policy is MissingPolicy.REJECT:
            row, column = np.argwhere(blank)[0]
            raise MissingCellError(
                "blank cell under the 'reject' missing-data policy",
                row=int(line_numbers[row]), column=column_name(int(column)))
        keep = ~blank.any(axis=1)
        LOGGER.warning("Dropping %d row(s) with blank cells", int((~keep).sum()))
        cells = cells[keep].reset_index(drop=True)
        line_numbers = line_numbers[keep]
        if cells.empty:
            raise MissingCellError("every row has a blank cell")
    dropped_rows = int(blank.any(axis=1).sum())

    labels = _parse_integer_column(cells.iloc[:, label_index], line_numbers, column_name(label_index))
    non_binary = np.flatnonzero((labels != 0) & (labels != 1))
    if non_binary.size:
        position = int(non_binary[0])
        raise NonBinaryLabelError(
            f"label value {labels[position]} is not 0 or 1",
            row=int(line_numbers[position]), column=column_name(label_index))

    columns = []
    low, high = options.response_range if options.response_range else (0, None)
    for index in item_indices:
        values = _parse_integer_column(cells.iloc[:, index], line_numbers, column_name(index))
        outside = values < low
        if high is not None:
            outside |= values > high
        if outside.any():
            position = int(np.flatnonzero(outside)[0])
            bounds = f"[{low}, {high}]" if high is not None else f">= {low}"
            raise OutOfRangeResponseError(
                f"item response {values[position]} is outside {bounds}",
                row=int(line_numbers[position]), column=column_name(index))
        columns.append(values)

    item_ids: Tuple[str, ...] = ()
    if header is not None:
        item_ids = tuple(header[index] for index in item_indices)

    try:
        return Dataset(
            labels=labels,
            items=np.column_stack(columns),
            item_ids=item_ids,
            response_range=options.response_range,
            dropped_rows=dropped_rows,
        )
    except ItemReducerError as e:
        raise DatasetLoadError(str(e)) from e


def write_dataset(dataset: Dataset, path: PathLike, delimiter: str = ",") -> None:
    """Write ``dataset`` in the layout ``load_dataset`` reads, header included."""
    frame = pd.DataFrame(dataset.items, columns=list(dataset.item_ids))
    frame.insert(0, DEFAULT_LABEL_NAME, dataset.labels, allow_duplicates=True)
    frame.to_csv(path, sep=delimiter, index=False, lineterminator="\n", encoding="utf-8")


def summarize(dataset: Dataset) -> DatasetSummary:
    """Descriptive counts of a loaded dataset."""
    minima = dataset.items.min(axis=0)
    maxima = dataset.items.max(axis=0)
    return DatasetSummary(
        respondents=dataset.n_respondents,
        items=dataset.n_items,
        positives=dataset.n_positive,
        prevalence=dataset.n_positive / dataset.n_respondents,
        response_ranges={
            item_id: (int(low), int(high))
            for item_id, low, high in zip(dataset.item_ids, minima, maxima)
        },
        missing_cells=0,
        dropped_rows=dataset.dropped_rows,
    )
