"""
Bench Suites and the Complexity Report
"""

import math
from pathlib import Path

import pandas as pd
import pytest

from apollonius.bench import (
    algorithm_params,
    bench_succeeded,
    complexity_report,
    format_bench_table,
    run_bench,
    variant_name,
    write_bench_table,
)
from apollonius.config import BenchColumns, ScalingColumns
from apollonius.containers import AlgorithmEntry, BenchManifest, ScalingOption
from apollonius.exceptions import InvalidParameter, ParseError
from apollonius.utils import yaml_file_to_manifest
from tests.conftest import YAML_DIRECTORY


def _bench(name: str, **updates) -> pd.DataFrame:
    manifest = yaml_file_to_manifest(YAML_DIRECTORY.joinpath(name))
    if updates:
        manifest = manifest.evolve(**updates)
    return run_bench(manifest, base_dir=YAML_DIRECTORY)


def test_rows_follow_the_manifest_order() -> None:
    """
    Datasets, then scalings, then algorithms
    """
    frame = _bench("fig8_suite.yaml")
    assert frame[BenchColumns.DATASET].tolist() == [
        "fig8",
        "fig8",
        "blobs",
        "blobs",
        "blobs[zscore]",
        "blobs[zscore]",
    ]
    assert frame[BenchColumns.ALGORITHM].tolist() == ["ncar", "knn1"] * 3
    assert list(frame.columns) == BenchColumns.ORDER
    assert (frame[BenchColumns.ERROR] == "").all()
    assert frame[BenchColumns.N_POINTS].tolist() == [10, 10, 64, 64, 64, 64]
    assert frame[BenchColumns.RI].iloc[0] == 1.0
    assert frame[BenchColumns.OUTLIERS].iloc[0] == 1
    assert bench_succeeded(frame)


def test_untimed_bench_is_deterministic() -> None:
    """
    Without timing two runs write identical tables, whatever the worker count
    """
    first = format_bench_table(_bench("fig8_suite.yaml", timing=False))
    second = format_bench_table(_bench("fig8_suite.yaml", timing=False, workers=3))
    assert first == second
    assert BenchColumns.RUNTIME_SECONDS not in first.splitlines()[0]


def test_a_corrupt_dataset_becomes_an_error_row() -> None:
    """
    Two result rows and one error row
    """
    frame = _bench("partial_failure.yaml")
    assert frame[BenchColumns.DATASET].tolist() == ["fig8", "broken", "rings"]
    errors = frame[BenchColumns.ERROR].tolist()
    assert errors[0] == "" and errors[2] == ""
    assert errors[1].startswith("ERROR: ")
    assert "row 2" in errors[1]
    assert pd.isna(frame[BenchColumns.N_POINTS].iloc[1])
    assert bench_succeeded(frame)


def test_every_row_failed() -> None:
    """
    A missing file fails all of its rows
    """
    frame = _bench("all_failed.yaml")
    assert len(frame) == 2
    assert not bench_succeeded(frame)


def test_empty_manifest() -> None:
    """
    Nothing to run is a parameter error
    """
    with pytest.raises(InvalidParameter):
        _bench("empty.yaml")
    with pytest.raises(InvalidParameter):
        run_bench(BenchManifest())


def test_environment_variables_are_expanded(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    ${VAR} references are filled in from the environment
    """
    monkeypatch.setenv("APOLLONIUS_TEST_DATASET", "worked-example")
    manifest = yaml_file_to_manifest(YAML_DIRECTORY.joinpath("env_suite.yaml"))
    assert manifest.datasets[0].name == "worked-example"
    assert manifest.algorithms[0].name.value == "ncar"
    assert manifest.repeats == 1


def test_invalid_yaml(tmp_path: Path) -> None:
    """
    Syntax errors carry their location
    """
    path = tmp_path.joinpath("broken.yaml")
    path.write_text("datasets: [a, b\n", encoding="utf-8")
    with pytest.raises(ParseError) as error:
        yaml_file_to_manifest(path)
    assert error.value.row is not None


@pytest.mark.parametrize(
    "text",
    [
        "- fig8\n- ncar\n",
        "datasets:\n  - name: x\n    generator: fig8\nalgorithms: [kmeans]\n",
        "datasets:\n  - name: x\n    generator: fig8\n    path: x.csv\nalgorithms: [ncar]\n",
    ],
)
def test_invalid_manifest(text: str, tmp_path: Path) -> None:
    """
    Manifests must be mappings of valid entries
    """
    path = tmp_path.joinpath("manifest.yaml")
    path.write_text(text, encoding="utf-8")
    with pytest.raises(InvalidParameter):
        yaml_file_to_manifest(path)


def test_dataset_targets_fill_in_target_counts() -> None:
    """
    Only algorithms that take a target count inherit the dataset's
    """
    assert algorithm_params(AlgorithmEntry(name="ncar"), 4) == {"target_count": 4}
    assert algorithm_params(AlgorithmEntry(name="ncar", targets=2), 4) == {"target_count": 2}
    assert algorithm_params(AlgorithmEntry(name="knn1"), 4) == {}


def test_variant_name() -> None:
    """
    Scaled variants carry their scaling in brackets
    """
    assert variant_name("iris", ScalingOption.raw) == "iris"
    assert variant_name("iris", ScalingOption.zscore) == "iris[zscore]"


def test_write_bench_table(tmp_path: Path) -> None:
    """
    Missing values are written as empty fields
    """
    frame = _bench("partial_failure.yaml", timing=False)
    text = write_bench_table(frame, tmp_path.joinpath("bench.csv")).read_text(encoding="utf-8")
    broken = text.splitlines()[2].split(",")
    assert broken[:4] == ["broken", "ncar", "", ""]


def test_complexity_report_shape() -> None:
    """
    One row per size, no ratio for the first
    """
    report = complexity_report(sizes=(60, 30), targets=3, repeats=1)
    assert report[ScalingColumns.N_POINTS].tolist() == [30, 60]
    assert math.isnan(report[ScalingColumns.RATIO].iloc[0])
    assert report[ScalingColumns.RATIO].iloc[1] > 0


def test_complexity_report_rejects_one_target() -> None:
    """
    NCAR needs two targets to pair
    """
    with pytest.raises(InvalidParameter):
        complexity_report(sizes=(30,), targets=1)


@pytest.mark.slow
def test_runtime_grows_at_most_quadratically() -> None:
    """
    Doubling n at most sextuples the median runtime
    """
    report = complexity_report(sizes=(1000, 2000), targets=15, repeats=3)
    assert report[ScalingColumns.RATIO].iloc[1] <= 6.0
