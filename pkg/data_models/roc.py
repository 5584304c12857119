"""Data models for confusion matrices and ROC curves."""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import numpy as np


def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else float("nan")


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts of a binary classification at one cutoff.

    Rates follow the standard definitions: sensitivity = TPR,
    specificity = TNR and FPR = 1 - specificity.
    """
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "fn", "tn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")

    @property
    def positives(self) -> int:
        """Total actual positives (P = tp + fn)."""
        return self.tp + self.fn

    @property
    def negatives(self) -> int:
        """Total actual negatives (N = fp + tn)."""
        return self.fp + self.tn

    @property
    def sensitivity(self) -> float:
        """True positive rate."""
        return _ratio(self.tp, self.positives)

    @property
    def specificity(self) -> float:
        """True negative rate."""
        return _ratio(self.tn, self.negatives)

    @property
    def false_positive_rate(self) -> float:
        return _ratio(self.fp, self.negatives)

    @property
    def false_negative_rate(self) -> float:
        return _ratio(self.fn, self.positives)

    @property
    def precision(self) -> float:
        """Positive predictive value; NaN when nothing is predicted positive."""
        return _ratio(self.tp, self.tp + self.fp)

    @property
    def accuracy(self) -> float:
        return _ratio(self.tp + self.tn, self.positives + self.negatives)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the matrix and its rates to a dictionary."""
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "sensitivity": self.sensitivity,
            "specificity": self.specificity,
            "false_positive_rate": self.false_positive_rate,
            "false_negative_rate": self.false_negative_rate,
            "precision": self.precision,
            "accuracy": self.accuracy,
        }


@dataclass(frozen=True, eq=False)
class RocCurve:
    """Empirical ROC curve.

    ``fpr[k]``/``tpr[k]`` is the point produced by predicting positive iff
    score >= ``thresholds[k]``. The first threshold is +inf, giving (0, 0);
    the last is the smallest score, giving (1, 1).
    """
    fpr: np.ndarray
    tpr: np.ndarray
    thresholds: np.ndarray

    def __post_init__(self) -> None:
        for name in ("fpr", "tpr", "thresholds"):
            array = np.array(getattr(self, name), dtype=np.float64, copy=True)
            array.setflags(write=False)
            object.__setattr__(self, name, array)

    @property
    def points(self) -> List[Tuple[float, float]]:
        """The curve as ``(fpr, tpr)`` pairs."""
        return [(float(x), float(y)) for x, y in zip(self.fpr, self.tpr)]

    def __len__(self) -> int:
        return int(self.fpr.size)

    def to_dict(self) -> Dict[str, Any]:
        """Convert the curve to a JSON-serializable dictionary."""
        return {
            "points": [
                {"threshold": None if np.isinf(threshold) else float(threshold),
                 "fpr": float(x), "tpr": float(y)}
                for threshold, x, y in zip(self.thresholds, self.fpr, self.tpr)
            ],
        }
