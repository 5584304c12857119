"""
Helper functions for recording and reading item_reducer's Prometheus metrics.
"""

from typing import Any, Dict, Optional

from prometheus_client import REGISTRY

from utils.metrics import MetricDataPointName

Labels = Optional[Dict[str, str]]


def _series(metric_name: MetricDataPointName, labels: Labels) -> Any:
    """Return the labelled child of a metric, or the metric itself."""
    return metric_name.value.labels(**labels) if labels else metric_name.value


def inc_counter_metric(
        metric_name: MetricDataPointName,
        increment: int = 1,
        labels: Labels = None) -> None:
    """Increment a counter such as AUC_COMPUTATION_COUNT.

    Args:
        metric_name: Counter to increment.
        increment: Amount to add. Defaults to 1.
        labels: Label values, required for labelled counters.
    """
    _series(metric_name, labels).inc(increment)


def add_histogram_metric(
        metric_name: MetricDataPointName,
        value: float,
        labels: Labels = None) -> None:
    """Observe one value, e.g. a reduction run duration in seconds."""
    _series(metric_name, labels).observe(value)


def get_metric_value(
        metric_name: MetricDataPointName,
        labels: Labels = None,
        suffix: str = "_total") -> float:
    """Current sample value of a metric from the default registry.

    Counters are read through their ``_total`` sample; pass ``_count`` or
    ``_sum`` for histograms. Returns 0.0 for a series not yet recorded.
    """
    # pylint: disable=protected-access
    sample = f"{metric_name.value._name}{suffix}"
    return REGISTRY.get_sample_value(sample, labels or {}) or 0.0
