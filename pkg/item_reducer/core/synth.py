"""
Planted-signal synthetic rating-scale datasets.

Each respondent draws a binary label with the requested prevalence and one
standard-normal latent value per item. On signal items positive respondents
are shifted up and negative respondents down by half of ``signal_strength``,
so the classes sit ``signal_strength`` apart. Noise items are identically
distributed in both classes. Latent values are binned into ``response_levels``
ordinal responses 0..L-1 at the standard-normal quantiles.

The generator is a test harness for the reduction pipeline, not a
psychometric simulator.
"""

import json
from pathlib import Path
from typing import Union

import numpy as np
from scipy import stats

from data_io.dataset_loader import write_dataset
from data_models.dataset import Dataset
from data_models.generator_spec import GeneratorSpec
from utils.error_handler import error_context
from utils.logging_config import get_logger
from utils.metric_helpers import inc_counter_metric
from utils.metrics import MetricDataPointName

LOGGER = get_logger(__name__)

RNG_ALGORITHM = "numpy PCG64"
SPEC_SIDECAR_SUFFIX = ".spec.json"


def _draw_labels(rng: np.random.Generator, spec: GeneratorSpec) -> np.ndarray:
    labels = (rng.random(spec.respondents) < spec.prevalence).astype(np.int64)
    # a dataset needs both classes
    if labels.sum() == 0:
        labels[rng.integers(spec.respondents)] = 1
    elif labels.sum() == spec.respondents:
        labels[rng.integers(spec.respondents)] = 0
    return labels


def generate(spec: GeneratorSpec) -> Dataset:
    """Draw a dataset from ``spec``.

    Identical specs, seed included, give bit-identical datasets.
    """
    rng = np.random.default_rng(spec.seed)
    labels = _draw_labels(rng, spec)

    latent = rng.standard_normal((spec.respondents, spec.items))
    if spec.signal_items:
        signal_columns = np.array(spec.signal_items) - 1
        half_shift = spec.signal_strength / 2.0
        latent[np.ix_(labels == 1, signal_columns)] += half_shift
        latent[np.ix_(labels == 0, signal_columns)] -= half_shift

    cut_points = stats.norm.ppf(np.arange(1, spec.response_levels) / spec.response_levels)
    responses = np.searchsorted(cut_points, latent).astype(np.int64)

    inc_counter_metric(MetricDataPointName.SYNTH_DATASET_GENERATED_COUNT)
    LOGGER.debug(
        "Generated %d x %d dataset (seed %d, signal items %s)",
        spec.respondents, spec.items, spec.seed, list(spec.signal_items))
    return Dataset(
        labels=labels,
        items=responses,
        response_range=(0, spec.response_levels - 1),
    )


def sidecar_path(output_path: Union[str, Path]) -> Path:
    """Path of the JSON file recording the spec next to ``output_path``."""
    output_path = Path(output_path)
    return output_path.with_name(output_path.name + SPEC_SIDECAR_SUFFIX)


def write_synthetic(spec: GeneratorSpec, output_path: Union[str, Path], delimiter: str = ",") -> Dataset:
    """Generate a dataset, write it as delimited text and record its spec.

    The spec and the RNG algorithm name go to ``<output_path>.spec.json``.
    """
    dataset = generate(spec)
    sidecar = {
        "generator": spec.to_dict(),
        "rng": RNG_ALGORITHM,
    }
    with error_context(f"writing synthetic dataset {output_path}", error_types=OSError):
        write_dataset(dataset, output_path, delimiter=delimiter)
        sidecar_path(output_path).write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    LOGGER.info("Wrote synthetic dataset to %s", output_path)
    return dataset
