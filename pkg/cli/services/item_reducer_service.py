"""
Item Reducer Service

This module contains the ItemReducerService class that runs library
operations on behalf of the CLI and shapes their results into reports.
"""

import logging
from typing import Any, Dict, Optional, Sequence

from data_io.dataset_loader import load_dataset, summarize
from data_io.loadings_loader import load_loadings
from data_models.dataset import Dataset, DatasetSummary
from data_models.generator_spec import GeneratorSpec
from data_models.loadings import ReliabilityComparison
from data_models.reduction import CumulativeAucCurve, ItemAucTable, ReducedScale
from data_models.run_config import RunConfig
from item_reducer.core.item_reduction import (
    REPORT_SCHEMA_VERSION,
    cumulative_auc_curve,
    item_auc_table,
    peak_prefix_length,
    reduction_report,
    select_reduced_scale,
)
from item_reducer.core.psychometrics import (
    construct_reliability,
    reliability_comparison,
    variance_extracted,
)
from item_reducer.core.roc_core import auc_rank, auc_trapezoid, gini_from_auc, roc_points
from item_reducer.core.synth import RNG_ALGORITHM, write_synthetic
from item_reducer.exceptions import UnknownItemError
from utils.performance_monitor import performance_context

LOGGER = logging.getLogger(__name__)

TOTAL_SCORE = "total"


class ItemReducerService:
    """Service layer for item_reducer CLI operations."""

    def load(self, run_config: RunConfig) -> Dataset:
        """Validate ``run_config`` and load its dataset."""
        run_config.validate()
        return load_dataset(str(run_config.input_path), run_config.ingest)

    def rank(self, run_config: RunConfig) -> ItemAucTable:
        """Per-item AUC table, best first."""
        dataset = self.load(run_config)
        return item_auc_table(dataset, max_workers=run_config.max_workers)

    def reduce(self, run_config: RunConfig) -> ReducedScale:
        """Select the reduced scale with the configured strategy."""
        dataset = self.load(run_config)
        with performance_context("reduce", strategy=run_config.strategy.value):
            return select_reduced_scale(
                dataset, strategy=run_config.strategy, max_workers=run_config.max_workers)

    def curve(
            self, run_config: RunConfig,
            order: Optional[Sequence[str]] = None) -> CumulativeAucCurve:
        """Cumulative AUC curve for ``order``, or for the ranked order when omitted."""
        dataset = self.load(run_config)
        if order is None:
            order = item_auc_table(dataset, max_workers=run_config.max_workers).ordering
        return cumulative_auc_curve(dataset, order)

    def roc(self, run_config: RunConfig, item_id: Optional[str] = None) -> Dict[str, Any]:
        """ROC points, both AUC estimates and the Gini for one item or the total score."""
        dataset = self.load(run_config)
        if item_id is None:
            scores = dataset.total_scores()
        else:
            try:
                scores = dataset.column(item_id)
            except KeyError:
                raise UnknownItemError(f"dataset has no item {item_id!r}") from None
        curve = roc_points(scores, dataset.labels)
        trapezoid = auc_trapezoid(curve)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "target": item_id if item_id is not None else TOTAL_SCORE,
            "auc_trapezoid": trapezoid,
            "auc_rank": auc_rank(scores, dataset.labels),
            "gini": gini_from_auc(trapezoid),
            **curve.to_dict(),
        }

    def summarize(self, run_config: RunConfig) -> DatasetSummary:
        """Descriptive counts of the dataset."""
        return summarize(self.load(run_config))

    def reliability(
            self,
            path: str,
            standardized: Optional[bool] = None,
            delimiter: str = ",") -> Dict[str, Any]:
        """CR/VE of a single loading set."""
        loadings = load_loadings(path, standardized=standardized, delimiter=delimiter)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "items": len(loadings),
            "cr": construct_reliability(loadings),
            "ve": variance_extracted(loadings),
        }

    def compare(
            self, full_path: str, reduced_path: str,
            threshold: Optional[float] = None,
            standardized: Optional[bool] = None,
            delimiter: str = ",") -> ReliabilityComparison:
        """Full-versus-reduced comparison record."""
        full = load_loadings(full_path, standardized=standardized, delimiter=delimiter)
        reduced = load_loadings(reduced_path, standardized=standardized, delimiter=delimiter)
        return reliability_comparison(full, reduced, threshold=threshold)

    def synth(self, spec: GeneratorSpec, output_path: str, delimiter: str = ",") -> Dict[str, Any]:
        """Write a synthetic dataset and return a description of it."""
        dataset = write_synthetic(spec, output_path, delimiter=delimiter)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "output": output_path,
            "respondents": dataset.n_respondents,
            "items": dataset.n_items,
            "positives": dataset.n_positive,
            "rng": RNG_ALGORITHM,
            "generator": spec.to_dict(),
        }

    @staticmethod
    def report(scale: ReducedScale) -> Dict[str, Any]:
        """Reduction report for ``scale``."""
        return reduction_report(scale)

    @staticmethod
    def curve_report(curve: CumulativeAucCurve) -> Dict[str, Any]:
        """JSON-ready description of a cumulative curve and its peak."""
        peak = peak_prefix_length(curve.aucs)
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "order": curve.item_ids,
            "curve": [{"item": s.item_id, "k": s.size, "auc": s.auc} for s in curve.steps],
            "peak": {"k": peak, "auc": curve.auc_at(peak)},
        }
