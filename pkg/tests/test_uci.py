"""
Accuracy on User-Supplied UCI Files

Point `APOLLONIUS_IRIS_CSV` / `APOLLONIUS_SEEDS_CSV` at local copies (features
first, class label in the last column) to run these.
"""

from os import getenv

import pytest

from apollonius.containers import NcarParams
from apollonius.data import load_csv, normalize_zscore
from apollonius.metrics import rand_index
from apollonius.ncar import run_ncar

MINIMUM_RAND_INDEX = 0.85


@pytest.mark.parametrize(
    "env_var",
    ["APOLLONIUS_IRIS_CSV", "APOLLONIUS_SEEDS_CSV"],
)
@pytest.mark.parametrize("zscore", [False, True], ids=["raw", "zscore"])
def test_three_class_datasets(env_var: str, zscore: bool) -> None:
    """
    Three targets, p = 0.05
    """
    path = getenv(env_var)
    if not path:
        pytest.skip(f"{env_var} is not set")
    dataset = load_csv(path)
    if zscore:
        dataset = normalize_zscore(dataset)
    partition = run_ncar(dataset, NcarParams(p=0.05, target_count=3))
    assert partition.n_groups == 3
    if not zscore:
        assert rand_index(partition, dataset.labels) >= MINIMUM_RAND_INDEX
