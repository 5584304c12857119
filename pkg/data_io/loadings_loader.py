"""
Readers for externally estimated factor loadings.

Two formats are accepted:

* delimited text with columns ``item_id, lambda[, delta]`` and an optional
  header row, recognised only when its item and lambda cells are both
  non-blank and non-numeric;
* JSON, either ``{"standardized": true, "loadings": [...]}`` or a bare list,
  where each entry is ``{"item": ..., "lambda": ..., "delta": ...}`` with
  ``delta`` optional.
"""

import json
from pathlib import Path
from typing import Any, List, Optional, Union

import pandas as pd

from data_io.exceptions import LoadingsLoadError
from data_models.loadings import ItemLoading, LoadingSet
from utils.error_handler import handle_errors
from utils.errors import ItemReducerError
from utils.logging_config import get_logger

LOGGER = get_logger(__name__)

PathLike = Union[str, Path]

JSON_SUFFIXES = (".json",)


def _to_float(value: Any, what: str, where: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise LoadingsLoadError(f"{what} {value!r} at {where} is not a number") from None


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def _from_json(path: Path, standardized: Optional[bool]) -> LoadingSet:
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise LoadingsLoadError(f"could not parse {path}: {e}") from e

    if isinstance(document, dict):
        entries = document.get("loadings")
        if standardized is None:
            standardized = bool(document.get("standardized", True))
    else:
        entries = document
    if not isinstance(entries, list):
        raise LoadingsLoadError(f"{path} must hold a list of loadings")

    loadings: List[ItemLoading] = []
    for index, entry in enumerate(entries, start=1):
        if not isinstance(entry, dict) or "item" not in entry or "lambda" not in entry:
            raise LoadingsLoadError(
                f"entry {index} of {path} needs 'item' and 'lambda' fields")
        where = f"entry {index}"
        delta = entry.get("delta")
        loadings.append(ItemLoading(
            item_id=str(entry["item"]),
            loading=_to_float(entry["lambda"], "lambda", where),
            error_variance=None if delta is None else _to_float(delta, "delta", where),
        ))
    return LoadingSet(tuple(loadings), standardized=True if standardized is None else standardized)


def _from_delimited(path: Path, delimiter: str, standardized: Optional[bool]) -> LoadingSet:
    try:
        frame = pd.read_csv(
            path, sep=delimiter, header=None, dtype=str,
            keep_default_na=False, skip_blank_lines=True)
    except pd.errors.EmptyDataError:
        return LoadingSet((), standardized=True if standardized is None else standardized)
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise LoadingsLoadError(f"could not parse {path}: {e}") from e

    frame = frame.fillna("").apply(lambda column: column.str.strip())
    if frame.shape[1] not in (2, 3):
        raise LoadingsLoadError(
            f"{path} must have 2 or 3 columns (item_id, lambda[, delta]), got {frame.shape[1]}")

    first_line = 1
    item_cell, lambda_cell = frame.iloc[0, 0], frame.iloc[0, 1]
    if lambda_cell != "" and not _is_number(lambda_cell) and not _is_number(item_cell):
        # header row
        frame = frame.iloc[1:]
        first_line = 2

    loadings: List[ItemLoading] = []
    for offset, row in enumerate(frame.itertuples(index=False)):
        where = f"row {first_line + offset}"
        delta = row[2] if len(row) == 3 and row[2] != "" else None
        loadings.append(ItemLoading(
            item_id=str(row[0]),
            loading=_to_float(row[1], "lambda", where),
            error_variance=None if delta is None else _to_float(delta, "delta", where),
        ))
    return LoadingSet(tuple(loadings), standardized=True if standardized is None else standardized)


@handle_errors(error_types=LoadingsLoadError)
def load_loadings(
        path: PathLike,
        standardized: Optional[bool] = None,
        delimiter: str = ",") -> LoadingSet:
    """Read a loading set from a JSON or delimited file.

    Args:
        path: ``.json`` files are parsed as JSON, anything else as delimited text.
        standardized: Overrides the file's flag; standardized loadings must
            satisfy |lambda| <= 1. Defaults to True.
        delimiter: Delimiter for text files.

    Raises:
        LoadingsLoadError: If the file cannot be parsed or its values are invalid.
    """
    path = Path(path)
    try:
        if path.suffix.lower() in JSON_SUFFIXES:
            loading_set = _from_json(path, standardized)
        else:
            loading_set = _from_delimited(path, delimiter, standardized)
    except LoadingsLoadError:
        raise
    except ItemReducerError as e:
        raise LoadingsLoadError(f"invalid loadings in {path}: {e}") from e
    LOGGER.info("Loaded %d loadings from %s", len(loading_set), path)
    return loading_set
