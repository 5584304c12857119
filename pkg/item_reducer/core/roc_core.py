"""
ROC curves, AUC and the Gini transform.

AUC is computed two independent ways: the trapezoidal area under the
empirical ROC curve and the Mann-Whitney rank statistic. Ties between a
positive and a negative count one half, and the ROC curve takes a single
diagonal step at a tied threshold, so both methods agree exactly.

A case is predicted positive iff its score >= cutoff. All functions are pure
and thread-safe.
"""

from typing import Sequence, Tuple, Union

import numpy as np
from scipy import stats

from data_models.roc import ConfusionMatrix, RocCurve
from item_reducer.exceptions import (
    DegenerateLabelsError,
    InvalidAucError,
    InvalidCurveError,
    InvalidLabelError,
    LengthMismatchError,
    NonFiniteScoreError,
)
from utils.logging_config import get_logger
from utils.metric_helpers import inc_counter_metric
from utils.metrics import AUC_METHOD_LABEL, MetricDataPointName

LOGGER = get_logger(__name__)

ArrayLike = Union[Sequence[float], np.ndarray]


def validate_scores_and_labels(
        scores: ArrayLike, labels: ArrayLike) -> Tuple[np.ndarray, np.ndarray]:
    """Coerce inputs to arrays and check the shared preconditions.

    Returns:
        ``(scores, labels)`` as float64 and int64 arrays.

    Raises:
        LengthMismatchError: Lengths differ or the input is empty.
        NonFiniteScoreError: A score is NaN or infinite.
        InvalidLabelError: A label is not 0 or 1.
        DegenerateLabelsError: Only one class is present.
    """
    score_array = np.asarray(scores, dtype=np.float64).ravel()
    label_array = np.asarray(labels).ravel()
    if score_array.size != label_array.size or score_array.size == 0:
        raise LengthMismatchError(score_array.size, label_array.size)
    if not np.isfinite(score_array).all():
        raise NonFiniteScoreError("scores must be finite")
    if not np.isin(label_array, (0, 1)).all():
        raise InvalidLabelError("labels must be 0 (negative) or 1 (positive)")
    label_array = label_array.astype(np.int64)

    n_positive = int(label_array.sum())
    n_negative = label_array.size - n_positive
    if n_positive == 0 or n_negative == 0:
        inc_counter_metric(MetricDataPointName.DEGENERATE_LABELS_ERROR_COUNT)
        raise DegenerateLabelsError(n_positive, n_negative)
    return score_array, label_array


def confusion_at_cutoff(
        scores: ArrayLike, labels: ArrayLike, cutoff: float) -> ConfusionMatrix:
    """Confusion matrix when every case with score >= ``cutoff`` is called positive."""
    score_array, label_array = validate_scores_and_labels(scores, labels)
    predicted = score_array >= cutoff
    actual = label_array == 1
    return ConfusionMatrix(
        tp=int(np.sum(predicted & actual)),
        fp=int(np.sum(predicted & ~actual)),
        fn=int(np.sum(~predicted & actual)),
        tn=int(np.sum(~predicted & ~actual)),
    )


def roc_points(scores: ArrayLike, labels: ArrayLike) -> RocCurve:
    """Empirical ROC curve over every distinct score value.

    The sweep starts from a cutoff above the maximum (the (0, 0) point) and
    lowers it through each distinct score in descending order; tied scores
    move the curve in one step. The cutoff at the minimum score already
    classifies everything positive, so it coincides with a below-minimum
    sentinel and ends the curve at (1, 1).
    """
    score_array, label_array = validate_scores_and_labels(scores, labels)
    n_positive = int(label_array.sum())
    n_negative = label_array.size - n_positive

    order = np.argsort(-score_array, kind="mergesort")
    sorted_scores = score_array[order]
    sorted_labels = label_array[order]

    true_positives = np.cumsum(sorted_labels)
    false_positives = np.cumsum(1 - sorted_labels)
    # last index of each run of equal scores
    run_ends = np.append(np.flatnonzero(np.diff(sorted_scores)), sorted_scores.size - 1)

    tpr = np.concatenate(([0.0], true_positives[run_ends] / n_positive))
    fpr = np.concatenate(([0.0], false_positives[run_ends] / n_negative))
    thresholds = np.concatenate(([np.inf], sorted_scores[run_ends]))
    return RocCurve(fpr=fpr, tpr=tpr, thresholds=thresholds)


def validate_curve(curve: RocCurve) -> None:
    """Check endpoints, unit-square bounds and monotonicity.

    Raises:
        InvalidCurveError: If the curve is malformed.
    """
    fpr, tpr = curve.fpr, curve.tpr
    if fpr.size != tpr.size or fpr.size < 2:
        raise InvalidCurveError("a ROC curve needs at least two points of matching length")
    if (fpr[0], tpr[0]) != (0.0, 0.0) or (fpr[-1], tpr[-1]) != (1.0, 1.0):
        raise InvalidCurveError("a ROC curve must start at (0, 0) and end at (1, 1)")
    if np.any(np.diff(fpr) < 0) or np.any(np.diff(tpr) < 0):
        raise InvalidCurveError("ROC curve coordinates must be non-decreasing")
    if fpr.min() < 0 or tpr.min() < 0 or fpr.max() > 1 or tpr.max() > 1:
        raise InvalidCurveError("ROC curve coordinates must lie in [0, 1]")


def auc_trapezoid(curve: RocCurve) -> float:
    """Area under ``curve`` as the sum of trapezoids between consecutive points."""
    validate_curve(curve)
    inc_counter_metric(MetricDataPointName.AUC_COMPUTATION_COUNT, labels={AUC_METHOD_LABEL: "trapezoid"})
    widths = np.diff(curve.fpr)
    heights = (curve.tpr[1:] + curve.tpr[:-1]) / 2.0
    return float(np.sum(widths * heights))


def auc_rank(scores: ArrayLike, labels: ArrayLike) -> float:
    """Probability that a random positive outscores a random negative, ties counting half.

    Computed from pooled mid-ranks (the Mann-Whitney U statistic divided by
    P * N) in O(M log M).
    """
    score_array, label_array = validate_scores_and_labels(scores, labels)
    inc_counter_metric(MetricDataPointName.AUC_COMPUTATION_COUNT, labels={AUC_METHOD_LABEL: "rank"})
    n_positive = int(label_array.sum())
    n_negative = label_array.size - n_positive

    ranks = stats.rankdata(score_array, method="average")
    u_statistic = ranks[label_array == 1].sum() - n_positive * (n_positive + 1) / 2.0
    return float(u_statistic / (n_positive * n_negative))


def gini_from_auc(auc: float) -> float:
    """Gini coefficient G = 2 * AUC - 1."""
    if not 0.0 <= auc <= 1.0:
        raise InvalidAucError(f"AUC must lie in [0, 1], got {auc}")
    return 2.0 * auc - 1.0


def gini_from_curve(curve: RocCurve) -> float:
    """Gini coefficient of a ROC curve via its trapezoidal AUC."""
    return gini_from_auc(auc_trapezoid(curve))
