"""
Construct reliability (CR) and variance extracted (VE) from factor loadings.

Loadings come from an external confirmatory factor analysis; nothing is
estimated here.
"""

from typing import Optional

import numpy as np

from data_models.loadings import LoadingSet, ReliabilityComparison
from item_reducer.config import config
from item_reducer.exceptions import ComputationError, EmptyLoadingSetError, SubsetViolationError
from utils.logging_config import get_logger

LOGGER = get_logger(__name__)


def _require_loadings(loadings: LoadingSet) -> None:
    if len(loadings) == 0:
        raise EmptyLoadingSetError("reliability needs at least one loading")


def construct_reliability(loadings: LoadingSet) -> float:
    """CR = (sum lambda)^2 / ((sum lambda)^2 + sum delta).

    Raises:
        EmptyLoadingSetError: If ``loadings`` is empty.
        ComputationError: If both sums are zero.
    """
    _require_loadings(loadings)
    squared_sum = float(np.sum(loadings.lambdas)) ** 2
    denominator = squared_sum + float(np.sum(loadings.deltas))
    if denominator == 0.0:
        raise ComputationError("construct reliability is undefined: all loadings and error variances are 0")
    return squared_sum / denominator


def variance_extracted(loadings: LoadingSet) -> float:
    """VE = sum lambda^2 / n.

    Raises:
        EmptyLoadingSetError: If ``loadings`` is empty.
    """
    _require_loadings(loadings)
    return float(np.mean(loadings.lambdas ** 2))


def reliability_comparison(
        full: LoadingSet,
        reduced: LoadingSet,
        threshold: Optional[float] = None) -> ReliabilityComparison:
    """Compare CR and VE of a full model and a reduced model.

    Args:
        full: Loadings of the full measurement model.
        reduced: Loadings of the reduced model; its items must all be in ``full``.
        threshold: Minimum acceptable reduced CR, ``config.reliability.cr_threshold``
            when omitted.

    Raises:
        SubsetViolationError: If ``reduced`` names an item ``full`` lacks.
    """
    missing = sorted(set(reduced.item_ids) - set(full.item_ids))
    if missing:
        raise SubsetViolationError(
            f"reduced model items {missing} are not in the full model")
    if threshold is None:
        threshold = config.reliability.cr_threshold

    comparison = ReliabilityComparison(
        full_cr=construct_reliability(full),
        full_ve=variance_extracted(full),
        reduced_cr=construct_reliability(reduced),
        reduced_ve=variance_extracted(reduced),
        threshold=threshold,
        full_items=len(full),
        reduced_items=len(reduced),
    )
    if not comparison.acceptable:
        LOGGER.warning(
            "Reduced model CR %.4f is below the %.2f threshold",
            comparison.reduced_cr, threshold)
    return comparison
