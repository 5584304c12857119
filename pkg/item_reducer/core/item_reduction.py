"""
AUC-driven rating-scale item reduction.

Items are ranked by their individual AUC against the outcome, the running
total of the best-first items is scored after each addition, and the reduced
scale is the shortest prefix at the peak of that cumulative curve. A greedy
forward variant, which re-scores every remaining item at each step, is
offered as an extension.

Running totals are unweighted sums of raw item responses.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from data_models.dataset import Dataset
from data_models.reduction import (
    CumulativeAucCurve,
    CumulativeStep,
    ItemAuc,
    ItemAucTable,
    ReducedScale,
    SelectionStrategy,
)
from item_reducer.config import config
from item_reducer.core.roc_core import auc_rank, gini_from_auc
from item_reducer.exceptions import DuplicateItemError, UnknownItemError, ValidationError
from utils.logging_config import get_logger
from utils.metric_helpers import add_histogram_metric, inc_counter_metric
from utils.metrics import STRATEGY_LABEL, MetricDataPointName

LOGGER = get_logger(__name__)

REPORT_SCHEMA_VERSION = "1.0"


def rank_item_aucs(
        item_ids: Sequence[str],
        aucs: Sequence[float],
        total_scale_auc: float) -> ItemAucTable:
    """Order precomputed item AUCs best-first.

    Equal AUCs keep the order in which the items were given, i.e. dataset
    column position. Item ids play no part in tie-breaking, so with custom
    header names two tied items need not come out in alphabetical order.
    """
    if len(item_ids) != len(aucs):
        raise ValidationError(f"got {len(item_ids)} item ids for {len(aucs)} AUC values")
    entries = [
        ItemAuc(item_id=str(item_id), auc=float(auc), position=position)
        for position, (item_id, auc) in enumerate(zip(item_ids, aucs))
    ]
    entries.sort(key=lambda entry: (-entry.auc, entry.position))
    return ItemAucTable(entries=tuple(entries), total_scale_auc=float(total_scale_auc))


def item_auc_table(dataset: Dataset, max_workers: Optional[int] = None) -> ItemAucTable:
    """Individual AUC of every item plus the AUC of the all-items total.

    Args:
        dataset: A validated dataset.
        max_workers: Threads used for the per-item AUCs; defaults to
            ``config.analysis.max_workers``. 1 runs sequentially.
    """
    workers = max_workers or config.analysis.max_workers
    columns = [dataset.items[:, position] for position in range(dataset.n_items)]

    if workers > 1 and dataset.n_items > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            aucs = list(pool.map(lambda column: auc_rank(column, dataset.labels), columns))
    else:
        aucs = [auc_rank(column, dataset.labels) for column in columns]

    for item_id, auc in zip(dataset.item_ids, aucs):
        if auc < 0.5:
            LOGGER.warning(
                "Item %s has AUC %.4f < 0.5; it ranks positives below negatives "
                "and is kept unflipped", item_id, auc)

    total_auc = auc_rank(dataset.total_scores(), dataset.labels)
    return rank_item_aucs(dataset.item_ids, aucs, total_auc)


def _check_ordering(dataset: Dataset, ordering: Sequence[str]) -> List[int]:
    if not ordering:
        raise ValidationError("an item ordering needs at least one item")
    positions = []
    seen = set()
    for item_id in ordering:
        if item_id in seen:
            raise DuplicateItemError(f"item {item_id!r} appears twice in the ordering")
        seen.add(item_id)
        try:
            positions.append(dataset.column_index(item_id))
        except KeyError:
            raise UnknownItemError(f"dataset has no item {item_id!r}") from None
    return positions


def cumulative_auc_curve(dataset: Dataset, ordering: Sequence[str]) -> CumulativeAucCurve:
    """AUC of the running total after each item of ``ordering`` is added.

    ``ordering`` may be a permutation of the dataset's items or a prefix of one.

    Raises:
        UnknownItemError: An id is not in the dataset.
        DuplicateItemError: An id is repeated.
    """
    positions = _check_ordering(dataset, ordering)
    running_total = np.zeros(dataset.n_respondents, dtype=np.int64)
    steps = []
    for size, (item_id, position) in enumerate(zip(ordering, positions), start=1):
        running_total = running_total + dataset.items[:, position]
        auc = auc_rank(running_total, dataset.labels)
        LOGGER.debug("Running total of %d item(s) through %s: AUC %.6f", size, item_id, auc)
        steps.append(CumulativeStep(item_id=str(item_id), size=size, auc=auc))
    return CumulativeAucCurve(steps=tuple(steps))


def peak_prefix_length(aucs: Sequence[float]) -> int:
    """1-based length of the shortest prefix attaining the maximum AUC."""
    if len(aucs) == 0:
        raise ValidationError("cannot take the peak of an empty curve")
    # argmax returns the first maximum
    return int(np.argmax(np.asarray(aucs, dtype=np.float64))) + 1


def scale_from_curve(
        item_table: ItemAucTable,
        curve: CumulativeAucCurve,
        strategy: SelectionStrategy = SelectionStrategy.RANKED_PREFIX,
        item_count: Optional[int] = None) -> ReducedScale:
    """Select the peak prefix of ``curve`` as the reduced scale."""
    size = peak_prefix_length(curve.aucs)
    return ReducedScale(
        strategy=strategy,
        selected_item_ids=tuple(curve.item_ids[:size]),
        reduced_auc=curve.auc_at(size),
        full_auc=item_table.total_scale_auc,
        item_count=item_count or len(item_table),
        curve=curve,
        item_table=item_table,
    )


def _greedy_forward_curve(dataset: Dataset) -> CumulativeAucCurve:
    """Add, at each step, the item whose inclusion maximises the running-total AUC.

    Stops as soon as no remaining item strictly improves the AUC. Ties go to
    the earliest column.
    """
    remaining = list(range(dataset.n_items))
    running_total = np.zeros(dataset.n_respondents, dtype=np.int64)
    best_auc = -np.inf
    steps: List[CumulativeStep] = []
    while remaining:
        candidates = [
            (auc_rank(running_total + dataset.items[:, position], dataset.labels), position)
            for position in remaining
        ]
        auc, position = max(candidates, key=lambda candidate: (candidate[0], -candidate[1]))
        if auc <= best_auc:
            break
        best_auc = auc
        remaining.remove(position)
        running_total = running_total + dataset.items[:, position]
        steps.append(CumulativeStep(
            item_id=dataset.item_ids[position], size=len(steps) + 1, auc=auc))
        LOGGER.debug("Greedy step %d adds %s: AUC %.6f", len(steps), dataset.item_ids[position], auc)
    return CumulativeAucCurve(steps=tuple(steps))


def select_reduced_scale(
        dataset: Dataset,
        strategy: SelectionStrategy = SelectionStrategy.RANKED_PREFIX,
        max_workers: Optional[int] = None) -> ReducedScale:
    """Choose the reduced item subset.

    ``RANKED_PREFIX`` keeps the shortest best-first prefix with the highest
    running-total AUC. ``GREEDY_FORWARD`` builds the subset by repeatedly
    adding the item that most improves the running-total AUC.
    """
    started = time.perf_counter()
    item_table = item_auc_table(dataset, max_workers=max_workers)

    if strategy is SelectionStrategy.RANKED_PREFIX:
        curve = cumulative_auc_curve(dataset, item_table.ordering)
    else:
        curve = _greedy_forward_curve(dataset)
    scale = scale_from_curve(item_table, curve, strategy, item_count=dataset.n_items)

    labels = {STRATEGY_LABEL: strategy.value}
    inc_counter_metric(MetricDataPointName.REDUCTION_RUN_COUNT, labels=labels)
    add_histogram_metric(
        MetricDataPointName.REDUCTION_DURATION_SECONDS, time.perf_counter() - started, labels=labels)
    LOGGER.info(
        "%s kept %d of %d items: AUC %.4f (full scale %.4f)",
        strategy.value, len(scale.selected_item_ids), dataset.n_items,
        scale.reduced_auc, scale.full_auc)
    return scale


def format_percent(ratio: float) -> str:
    """Render a ratio as a percentage with two decimals, e.g. ``28.57%``."""
    return f"{ratio * 100:.2f}%"


def reduction_report(scale: ReducedScale) -> Dict[str, Any]:
    """Machine-readable report of a reduced scale.

    The dictionary is JSON-serializable and contains only values derived
    from ``scale``, so serialising it twice yields identical text.
    """
    entries = scale.item_table.entries
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "strategy": scale.strategy.value,
        "items": [entry.item_id for entry in entries],
        "item_auc": [entry.auc for entry in entries],
        "curve": [
            {"item": step.item_id, "k": step.size, "auc": step.auc}
            for step in scale.curve.steps
        ],
        "selected": list(scale.selected_item_ids),
        "item_count": scale.item_count,
        "selected_count": len(scale.selected_item_ids),
        "full_auc": scale.full_auc,
        "full_gini": gini_from_auc(scale.full_auc),
        "reduced_auc": scale.reduced_auc,
        "auc_delta": scale.auc_delta,
        "reduction_ratio": scale.reduction_ratio,
        "reduction_percent": format_percent(scale.reduction_ratio),
    }
