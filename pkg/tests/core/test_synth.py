"""
Tests for the planted-signal synthetic data generator.

The Monte-Carlo checks over many seeds are marked ``integration``.
"""

import json
from pathlib import Path

import numpy as np
import pytest
from scipy import stats

from data_io.dataset_loader import load_dataset
from data_models.generator_spec import GeneratorSpec
from item_reducer.core.item_reduction import item_auc_table, select_reduced_scale
from item_reducer.core.roc_core import auc_rank
from item_reducer.core.synth import RNG_ALGORITHM, generate, sidecar_path, write_synthetic
from item_reducer.exceptions import InvalidGeneratorSpecError

SIGNAL_ITEMS = (1, 2, 3, 4)


class TestGeneratorSpec:
    """Test spec validation."""

    @pytest.mark.parametrize("kwargs", [
        {"response_levels": 1},
        {"prevalence": 0.0},
        {"prevalence": 1.0},
        {"signal_items": (13,)},
        {"signal_items": (0,)},
        {"signal_strength": -0.5},
        {"respondents": 1},
        {"items": 0},
    ])
    def test_rejects_invalid_fields(self, kwargs: dict) -> None:
        """Test that out-of-range fields are rejected."""
        params = {"respondents": 100, "items": 12, **kwargs}

        with pytest.raises(InvalidGeneratorSpecError):
            GeneratorSpec(**params)

    def test_noise_items(self) -> None:
        """Test that noise items are the complement of signal items."""
        spec = GeneratorSpec(respondents=10, items=5, signal_items=(4, 2))

        assert spec.signal_items == (2, 4)
        assert spec.noise_items == (1, 3, 5)


class TestGenerate:
    """Test dataset generation."""

    def test_reproducible(self) -> None:
        """Test that the same spec gives the same dataset."""
        spec = GeneratorSpec(respondents=200, items=8, signal_items=(1,), seed=42)

        assert generate(spec) == generate(spec)

    def test_seed_changes_data(self) -> None:
        """Test that different seeds give different datasets."""
        first = generate(GeneratorSpec(respondents=200, items=8, seed=1))
        second = generate(GeneratorSpec(respondents=200, items=8, seed=2))

        assert first != second

    def test_shape_and_levels(self) -> None:
        """Test dimensions, ids and the response range."""
        dataset = generate(GeneratorSpec(respondents=300, items=5, response_levels=5, seed=3))

        assert dataset.items.shape == (300, 5)
        assert dataset.item_ids == ("V1", "V2", "V3", "V4", "V5")
        assert dataset.items.min() >= 0
        assert dataset.items.max() <= 4
        assert dataset.response_range == (0, 4)

    def test_prevalence_within_binomial_bounds(self) -> None:
        """Test that the positive count lies in the 99% binomial interval."""
        spec = GeneratorSpec(respondents=1000, items=3, prevalence=0.5, seed=8)
        low, high = stats.binom.interval(0.99, spec.respondents, spec.prevalence)

        assert low <= generate(spec).n_positive <= high

    def test_both_classes_forced(self) -> None:
        """Test that tiny samples still contain both classes."""
        for seed in range(30):
            dataset = generate(GeneratorSpec(respondents=2, items=1, prevalence=0.05, seed=seed))

            assert dataset.n_positive == 1

    def test_saturated_signal_item(self) -> None:
        """Test that a very strong signal item separates the classes and is kept alone."""
        dataset = generate(GeneratorSpec(
            respondents=300, items=6, signal_items=(3,), signal_strength=30.0, seed=5))

        assert auc_rank(dataset.column("V3"), dataset.labels) == 1.0
        assert select_reduced_scale(dataset).selected_item_ids == ("V3",)

    def test_records_metric(self, mocker) -> None:
        """Test that each generated dataset is counted."""
        inc = mocker.patch("item_reducer.core.synth.inc_counter_metric")

        generate(GeneratorSpec(respondents=10, items=2))

        inc.assert_called_once()


class TestWriteSynthetic:
    """Test writing generated datasets."""

    def test_round_trip_and_sidecar(self, tmp_path: Path) -> None:
        """Test that the written file loads back and the spec is recorded."""
        spec = GeneratorSpec(respondents=50, items=4, signal_items=(2,), seed=9)
        output = tmp_path / "synthetic.csv"

        dataset = write_synthetic(spec, output)

        assert load_dataset(output) == dataset
        sidecar = json.loads(sidecar_path(output).read_text(encoding="utf-8"))
        assert sidecar["rng"] == RNG_ALGORITHM
        assert sidecar["generator"]["signal_items"] == [2]
        assert sidecar["generator"]["seed"] == 9
        assert sidecar_path(output).name == "synthetic.csv.spec.json"

    def test_byte_identical_for_same_seed(self, tmp_path: Path) -> None:
        """Test that writing the same spec twice gives identical bytes."""
        spec = GeneratorSpec(respondents=80, items=5, signal_items=(1, 2), seed=11)

        write_synthetic(spec, tmp_path / "a.csv")
        write_synthetic(spec, tmp_path / "b.csv")

        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


@pytest.mark.integration
class TestMonteCarlo:
    """Monte-Carlo checks of the generator and the reduction pipeline."""

    def test_null_item_auc_mean(self) -> None:
        """Test that without signal the mean item AUC is near 0.5."""
        means = [
            np.mean([entry.auc for entry in item_auc_table(generate(GeneratorSpec(
                respondents=500, items=12, signal_strength=0.0, seed=seed))).entries])
            for seed in range(200)
        ]

        assert 0.47 <= float(np.mean(means)) <= 0.53

    def test_planted_signal_recovered(self) -> None:
        """Test that ranked-prefix selection keeps only signal items."""
        passes = 0
        for seed in range(100):
            dataset = generate(GeneratorSpec(
                respondents=500, items=12, signal_items=SIGNAL_ITEMS,
                signal_strength=1.0, seed=seed))
            scale = select_reduced_scale(dataset)
            signal_ids = {f"V{position}" for position in SIGNAL_ITEMS}

            if set(scale.selected_item_ids) <= signal_ids and scale.reduced_auc >= scale.full_auc - 0.01:
                passes += 1

        assert passes >= 95

    def test_null_selection_stays_near_chance(self) -> None:
        """Test that without signal the selected AUC stays in [0.45, 0.60]."""
        for seed in range(100):
            dataset = generate(GeneratorSpec(
                respondents=500, items=12, signal_strength=0.0, seed=seed))

            assert 0.45 <= select_reduced_scale(dataset).reduced_auc <= 0.60

    def test_noise_items_exchangeable(self) -> None:
        """Test that two noise positions have indistinguishable AUC distributions."""
        first, last = [], []
        for seed in range(200):
            dataset = generate(GeneratorSpec(
                respondents=500, items=12, signal_items=SIGNAL_ITEMS, seed=seed))
            first.append(auc_rank(dataset.column("V5"), dataset.labels))
            last.append(auc_rank(dataset.column("V12"), dataset.labels))

        assert stats.ks_2samp(first, last).pvalue > 0.001
