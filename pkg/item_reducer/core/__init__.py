"""
Item Reducer Core Package

ROC/AUC primitives, AUC-driven item reduction, construct reliability and the
planted-signal data generator.
"""

from .roc_core import (
    auc_rank,
    auc_trapezoid,
    confusion_at_cutoff,
    gini_from_auc,
    gini_from_curve,
    roc_points,
)
from .item_reduction import (
    cumulative_auc_curve,
    item_auc_table,
    peak_prefix_length,
    rank_item_aucs,
    reduction_report,
    select_reduced_scale,
)
from .psychometrics import construct_reliability, reliability_comparison, variance_extracted
from .synth import generate, write_synthetic

__all__ = [
    "auc_rank",
    "auc_trapezoid",
    "confusion_at_cutoff",
    "gini_from_auc",
    "gini_from_curve",
    "roc_points",
    "cumulative_auc_curve",
    "item_auc_table",
    "peak_prefix_length",
    "rank_item_aucs",
    "reduction_report",
    "select_reduced_scale",
    "construct_reliability",
    "reliability_comparison",
    "variance_extracted",
    "generate",
    "write_synthetic",
]
