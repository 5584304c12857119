"""Data models for item ranking and scale reduction results."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from utils.errors import ValidationError


class SelectionStrategy(Enum):
    """How the reduced item subset is chosen."""

    RANKED_PREFIX = "ranked-prefix"
    GREEDY_FORWARD = "greedy-forward"


@dataclass(frozen=True)
class ItemAuc:
    """One item's individual AUC and its 0-based column position."""
    item_id: str
    auc: float
    position: int


@dataclass(frozen=True)
class ItemAucTable:
    """Per-item AUCs sorted best-first.

    Entries are in descending AUC order; equal AUCs keep column order.
    """
    entries: Tuple[ItemAuc, ...]
    total_scale_auc: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for previous, current in zip(self.entries, self.entries[1:]):
            if (previous.auc, -previous.position) < (current.auc, -current.position):
                raise ValidationError("item AUC table entries must be sorted best-first")

    @property
    def ordering(self) -> List[str]:
        """Item ids best-first."""
        return [entry.item_id for entry in self.entries]

    def ascending(self) -> List[ItemAuc]:
        """Entries worst-first, the way printed AUC tables usually read."""
        return list(reversed(self.entries))

    def auc_of(self, item_id: str) -> float:
        """Individual AUC of ``item_id``.

        Raises:
            KeyError: If the table has no such item.
        """
        for entry in self.entries:
            if entry.item_id == item_id:
                return entry.auc
        raise KeyError(item_id)

    @property
    def best(self) -> ItemAuc:
        return self.entries[0]

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class CumulativeStep:
    """AUC of the running total after adding ``item_id`` as the ``size``-th item."""
    item_id: str
    size: int
    auc: float


@dataclass(frozen=True)
class CumulativeAucCurve:
    """Running-total AUC as items are added one at a time."""
    steps: Tuple[CumulativeStep, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise ValidationError("a cumulative AUC curve needs at least one step")
        for index, step in enumerate(self.steps, start=1):
            if step.size != index:
                raise ValidationError(
                    f"step {index} must have size {index}, got {step.size}")

    @property
    def item_ids(self) -> List[str]:
        return [step.item_id for step in self.steps]

    @property
    def aucs(self) -> List[float]:
        return [step.auc for step in self.steps]

    def auc_at(self, size: int) -> float:
        """AUC of the running total of the first ``size`` items (1-based)."""
        if not 1 <= size <= len(self.steps):
            raise IndexError(f"size must lie in [1, {len(self.steps)}], got {size}")
        return self.steps[size - 1].auc

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class ReducedScale:
    """The selected item subset together with the trace that produced it."""
    strategy: SelectionStrategy
    selected_item_ids: Tuple[str, ...]
    reduced_auc: float
    full_auc: float
    item_count: int
    curve: CumulativeAucCurve
    item_table: ItemAucTable

    def __post_init__(self) -> None:
        object.__setattr__(self, "selected_item_ids", tuple(self.selected_item_ids))
        size = len(self.selected_item_ids)
        if not 1 <= size <= self.item_count:
            raise ValidationError(
                f"selected item count must lie in [1, {self.item_count}], got {size}")
        if self.curve.auc_at(size) != self.reduced_auc:
            raise ValidationError("reduced_auc must equal the curve value at the selected size")
        if tuple(self.curve.item_ids[:size]) != self.selected_item_ids:
            raise ValidationError("selected items must be the curve's leading items")

    @property
    def reduction_ratio(self) -> float:
        """Fraction of items retained."""
        return len(self.selected_item_ids) / self.item_count

    @property
    def auc_delta(self) -> float:
        """Reduced-scale AUC minus full-scale AUC."""
        return self.reduced_auc - self.full_auc
