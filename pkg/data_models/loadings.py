"""Data models for factor loadings and reliability results."""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from item_reducer.exceptions import (
    DuplicateItemError,
    InvalidLoadingError,
    NegativeErrorVarianceError,
)


@dataclass(frozen=True)
class ItemLoading:
    """Factor loading (lambda) of one item and its optional error variance (delta)."""
    item_id: str
    loading: float
    error_variance: Optional[float] = None


@dataclass(frozen=True)
class LoadingSet:
    """Loadings of the items of one measurement model.

    When an item carries no explicit error variance it is derived as
    1 - lambda^2, the standardized-solution convention.
    """
    loadings: Tuple[ItemLoading, ...]
    standardized: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "loadings", tuple(self.loadings))
        seen = set()
        for item in self.loadings:
            if item.item_id in seen:
                raise DuplicateItemError(f"item {item.item_id!r} appears twice in the loading set")
            seen.add(item.item_id)
            if not np.isfinite(item.loading):
                raise InvalidLoadingError(f"loading of {item.item_id!r} must be finite")
            if self.standardized and abs(item.loading) > 1.0:
                raise InvalidLoadingError(
                    f"standardized loading of {item.item_id!r} must satisfy |lambda| <= 1, "
                    f"got {item.loading}")
            if item.error_variance is not None and not item.error_variance >= 0.0:
                raise NegativeErrorVarianceError(
                    f"error variance of {item.item_id!r} must be >= 0, got {item.error_variance}")
            if item.error_variance is None and item.loading ** 2 > 1.0:
                raise NegativeErrorVarianceError(
                    f"derived error variance 1 - lambda^2 of {item.item_id!r} is negative; "
                    f"supply delta explicitly")

    @classmethod
    def from_pairs(
            cls,
            pairs: Dict[str, float],
            standardized: bool = True) -> "LoadingSet":
        """Build a set from ``{item_id: lambda}`` with derived error variances."""
        return cls(
            tuple(ItemLoading(item_id, loading) for item_id, loading in pairs.items()),
            standardized=standardized)

    @property
    def item_ids(self) -> List[str]:
        return [item.item_id for item in self.loadings]

    @property
    def lambdas(self) -> np.ndarray:
        return np.array([item.loading for item in self.loadings], dtype=np.float64)

    @property
    def deltas(self) -> np.ndarray:
        """Error variances, explicit where given, else 1 - lambda^2."""
        return np.array(
            [item.error_variance if item.error_variance is not None else 1.0 - item.loading ** 2
             for item in self.loadings],
            dtype=np.float64)

    def __len__(self) -> int:
        return len(self.loadings)


@dataclass(frozen=True)
class ReliabilityComparison:
    """CR/VE of a full and a reduced measurement model side by side."""
    full_cr: float
    full_ve: float
    reduced_cr: float
    reduced_ve: float
    threshold: float
    full_items: int
    reduced_items: int

    @property
    def cr_delta(self) -> float:
        return self.reduced_cr - self.full_cr

    @property
    def ve_delta(self) -> float:
        return self.reduced_ve - self.full_ve

    @property
    def acceptable(self) -> bool:
        """Whether the reduced model's CR reaches the threshold."""
        return self.reduced_cr >= self.threshold

    @property
    def reduced_ve_improved(self) -> bool:
        return self.reduced_ve > self.full_ve

    def to_dict(self) -> Dict[str, Any]:
        """Convert the comparison to a JSON-serializable dictionary."""
        return {
            "full": {"items": self.full_items, "cr": self.full_cr, "ve": self.full_ve},
            "reduced": {"items": self.reduced_items, "cr": self.reduced_cr, "ve": self.reduced_ve},
            "cr_delta": self.cr_delta,
            "ve_delta": self.ve_delta,
            "threshold": self.threshold,
            "acceptable": self.acceptable,
            "reduced_ve_improved": self.reduced_ve_improved,
        }
