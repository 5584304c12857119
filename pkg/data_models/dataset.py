"""Data models for rating-scale datasets."""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from utils.errors import DegenerateLabelsError, InvalidLabelError, ValidationError


def default_item_ids(n_items: int) -> Tuple[str, ...]:
    """Return positional item ids ``V1..Vn``."""
    return tuple(f"V{position}" for position in range(1, n_items + 1))


def _frozen_array(values: Any, dtype: Any) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Dataset:
    """A rating-scale table: one binary outcome and K ordinal items per respondent.

    Labels are 0 (negative) / 1 (positive); items hold non-negative integer
    responses. Arrays are copied and made read-only on construction, so a
    Dataset can be shared freely across threads.
    """
    labels: np.ndarray
    items: np.ndarray
    item_ids: Tuple[str, ...] = ()
    response_range: Optional[Tuple[int, int]] = None
    dropped_rows: int = 0

    def __post_init__(self) -> None:
        labels = _frozen_array(self.labels, np.int64)
        items = _frozen_array(self.items, np.int64)

        if labels.ndim != 1 or labels.size == 0:
            raise ValidationError("labels must be a nonempty 1-D sequence")
        if items.ndim != 2 or items.shape[0] != labels.size:
            raise ValidationError(
                f"items must be an M x K matrix with M={labels.size}, got shape {items.shape}")
        if items.shape[1] == 0:
            raise ValidationError("a dataset needs at least one item")
        if not np.isin(labels, (0, 1)).all():
            raise InvalidLabelError("labels must be 0 or 1")
        n_positive = int(labels.sum())
        if n_positive in (0, labels.size):
            raise DegenerateLabelsError(n_positive, labels.size - n_positive)
        if (items < 0).any():
            raise ValidationError("item responses must be non-negative integers")
        if self.response_range is not None:
            low, high = self.response_range
            if items.min() < low or items.max() > high:
                raise ValidationError(
                    f"item responses must lie in [{low}, {high}]")

        item_ids = tuple(str(item_id) for item_id in self.item_ids) or default_item_ids(items.shape[1])
        if len(item_ids) != items.shape[1]:
            raise ValidationError(
                f"expected {items.shape[1]} item ids, got {len(item_ids)}")
        if len(set(item_ids)) != len(item_ids):
            raise ValidationError("item ids must be unique")

        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "items", items)
        object.__setattr__(self, "item_ids", item_ids)

    @property
    def n_respondents(self) -> int:
        """Number of rows (M)."""
        return int(self.labels.size)

    @property
    def n_items(self) -> int:
        """Number of items (K)."""
        return int(self.items.shape[1])

    @property
    def n_positive(self) -> int:
        """Number of positive labels."""
        return int(self.labels.sum())

    def column_index(self, item_id: str) -> int:
        """Return the 0-based column position of ``item_id``.

        Raises:
            KeyError: If the dataset has no such item.
        """
        try:
            return self.item_ids.index(item_id)
        except ValueError:
            raise KeyError(item_id) from None

    def column(self, item_id: str) -> np.ndarray:
        """Return the responses for one item."""
        return self.items[:, self.column_index(item_id)]

    def total_scores(self, item_ids: Optional[Sequence[str]] = None) -> np.ndarray:
        """Unweighted row sums over ``item_ids`` (all items when omitted)."""
        if item_ids is None:
            return self.items.sum(axis=1)
        positions = [self.column_index(item_id) for item_id in item_ids]
        return self.items[:, positions].sum(axis=1)

    def equals(self, other: "Dataset") -> bool:
        """Value equality on labels, items and item ids."""
        return (
            self.item_ids == other.item_ids
            and np.array_equal(self.labels, other.labels)
            and np.array_equal(self.items, other.items)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dataset):
            return NotImplemented
        return self.equals(other)

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class DatasetSummary:
    """Descriptive counts for a loaded Dataset."""
    respondents: int
    items: int
    positives: int
    prevalence: float
    response_ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    missing_cells: int = 0
    dropped_rows: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """Convert the summary to a JSON-serializable dictionary."""
        return {
            "respondents": self.respondents,
            "items": self.items,
            "positives": self.positives,
            "negatives": self.respondents - self.positives,
            "prevalence": self.prevalence,
            "response_ranges": {
                item_id: [low, high] for item_id, (low, high) in self.response_ranges.items()
            },
            "missing_cells": self.missing_cells,
            "dropped_rows": self.dropped_rows,
        }
