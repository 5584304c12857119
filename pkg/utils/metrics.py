"""
Prometheus metrics for item_reducer.
"""

import enum

from prometheus_client import Counter, Histogram

# Label names
AUC_METHOD_LABEL = "method"
STRATEGY_LABEL = "strategy"

# Custom Histogram buckets
MILLISECOND_TO_MINUTE = (
    .001, .005, .010, .025, .05, .1, .25, .5, 1.0, 2.5, 5.0, 10.0, 30.0, 60.0
)

# ROC / AUC metrics
# pylint: disable=invalid-name
auc_computation_count = Counter(
    "item_reducer_auc_computation_count",
    "Number of AUC computations",
    labelnames=[AUC_METHOD_LABEL],
)
degenerate_labels_error_count = Counter(
    "item_reducer_degenerate_labels_error_count",
    "Number of inputs rejected because only one class was present",
)

# Dataset ingest metrics
dataset_load_success_count = Counter(
    "item_reducer_dataset_load_success_count",
    "Number of successfully loaded datasets",
)
dataset_load_error_count = Counter(
    "item_reducer_dataset_load_error_count",
    "Number of dataset loads rejected by validation or parsing",
)

# Item reduction metrics
reduction_run_count = Counter(
    "item_reducer_reduction_run_count",
    "Number of item reduction runs",
    labelnames=[STRATEGY_LABEL],
)
reduction_duration_seconds = Histogram(
    "item_reducer_reduction_duration_seconds",
    "Duration of item reduction runs in seconds",
    labelnames=[STRATEGY_LABEL],
    buckets=MILLISECOND_TO_MINUTE,
)

# Synthetic data metrics
synth_dataset_generated_count = Counter(
    "item_reducer_synth_dataset_generated_count",
    "Number of synthetic datasets generated",
)
# pylint: enable=invalid-name


class MetricDataPointName(enum.Enum):
    """Enumeration of Prometheus metric names."""
    AUC_COMPUTATION_COUNT = auc_computation_count
    DEGENERATE_LABELS_ERROR_COUNT = degenerate_labels_error_count
    DATASET_LOAD_SUCCESS_COUNT = dataset_load_success_count
    DATASET_LOAD_ERROR_COUNT = dataset_load_error_count
    REDUCTION_RUN_COUNT = reduction_run_count
    REDUCTION_DURATION_SECONDS = reduction_duration_seconds
    SYNTH_DATASET_GENERATED_COUNT = synth_dataset_generated_count
