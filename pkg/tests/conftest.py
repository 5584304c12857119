"""Shared fixtures for the item_reducer test suite."""

from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from data_models.dataset import Dataset

# Published per-item AUCs of a 21-item screening scale, keyed by item number
PUBLISHED_ITEM_AUCS = {
    1: 0.725009, 2: 0.631205, 3: 0.655666, 4: 0.651187, 5: 0.658478, 6: 0.610004,
    7: 0.701489, 8: 0.667983, 9: 0.700461, 10: 0.697225, 11: 0.597342, 12: 0.636791,
    13: 0.648917, 14: 0.707401, 15: 0.692064, 16: 0.605937, 17: 0.674283, 18: 0.610028,
    19: 0.629285, 20: 0.666999, 21: 0.587468,
}

# Running-total AUCs of the same scale, items added best-first
PUBLISHED_ORDER = [1, 14, 7, 9, 10, 15, 17, 8, 20, 5, 3, 4, 13, 12, 2, 19, 18, 6, 16, 11, 21]
PUBLISHED_CUMULATIVE_AUCS = [
    0.725, 0.777, 0.795, 0.810, 0.813, 0.822, 0.821, 0.819, 0.820, 0.821, 0.821,
    0.821, 0.821, 0.820, 0.819, 0.818, 0.816, 0.814, 0.812, 0.811, 0.812,
]

# Standardized loadings of the full 21-item model
FULL_MODEL_LOADINGS = {
    "V1": .716, "V2": .604, "V3": .655, "V4": .585, "V5": .633, "V6": .454, "V7": .636,
    "V8": .645, "V9": .632, "V10": .523, "V11": .394, "V12": .594, "V13": .514,
    "V14": .737, "V15": .654, "V16": .413, "V17": .589, "V18": .468, "V19": .520,
    "V20": .681, "V21": .433,
}

# Standardized loadings of the reduced 6-item model
REDUCED_MODEL_LOADINGS = {
    "V1": .748, "V7": .614, "V9": .703, "V10": .534, "V14": .736, "V15": .816,
}


@pytest.fixture(name='toy_dataset')
def toy_dataset_fixture() -> Dataset:
    """Four respondents, three items with AUCs 1.0, 0.5 and 0.0.

    Running totals in ranked order score 1.0, 0.875 and 0.5.
    """
    return Dataset(
        labels=np.array([0, 0, 1, 1]),
        items=np.array([
            [0, 1, 1],
            [0, 0, 1],
            [1, 0, 0],
            [1, 1, 0],
        ]),
    )


@pytest.fixture(name='write_text')
def write_text_fixture(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write ``content`` to ``tmp_path / name`` and return the path."""
    def _write(name: str, content: str) -> Path:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return path
    return _write
