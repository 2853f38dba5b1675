"""
Benchmark Suites and the Complexity Report
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import ValidationError

from apollonius.algorithms import ALGORITHMS, NcarAlgorithm, get_algorithm
from apollonius.config import BenchColumns, BenchConfig, GeneratorConfig, ScalingColumns
from apollonius.containers import (
    AlgorithmEntry,
    BenchManifest,
    DataSet,
    DatasetEntry,
    ScalingOption,
)
from apollonius.data import (
    generate_gaussian_rings,
    load_csv,
    normalize_zscore,
    parse_generator_spec,
)
from apollonius.exceptions import ApolloniusError, InvalidParameter

logger = logging.getLogger(__name__)

# (dataset index, scaling index, algorithm index)
_RowKey = Tuple[int, int, int]


def _float_text(value: float) -> str:
    return repr(float(value))


def variant_name(name: str, scaling: ScalingOption) -> str:
    """
    Bench name of a scaled dataset variant, `iris` or `iris[zscore]`
    """
    if scaling == ScalingOption.raw:
        return name
    return f"{name}[{scaling.value}]"


def load_dataset_entry(entry: DatasetEntry, base_dir: Optional[Path] = None) -> DataSet:
    """
    Load the Raw DataSet of a Manifest Entry

    Relative paths are resolved against `base_dir`, the manifest's directory.

    Parameters
    ----------
    entry: DatasetEntry
    base_dir: Optional[Path]

    Returns
    -------
    DataSet
    """
    if entry.generator is not None:
        dataset = parse_generator_spec(entry.generator, seed=entry.seed)
    else:
        path = Path(str(entry.path)).expanduser()
        if not path.is_absolute() and base_dir is not None:
            path = base_dir.joinpath(path)
        dataset = load_csv(
            path,
            label_column=entry.label_column,
            delimiter=entry.delimiter,
            header=entry.header,
        )
    return dataset.evolve(name=entry.name)


def dataset_variants(entry: DatasetEntry, dataset: DataSet) -> List[Tuple[ScalingOption, DataSet]]:
    """
    Every Scaling Variant a Manifest Entry Asks For
    """
    variants: List[Tuple[ScalingOption, DataSet]] = []
    for scaling in entry.scaling:
        scaled = normalize_zscore(dataset) if scaling == ScalingOption.zscore else dataset
        variants.append((scaling, scaled.evolve(name=variant_name(entry.name, scaling))))
    return variants


def algorithm_params(entry: AlgorithmEntry, dataset_targets: Optional[int] = None) -> Dict[str, Any]:
    """
    Keyword Parameters of an Algorithm Entry

    A dataset's `targets` fills in the target count of algorithms that take one
    and do not set their own.

    Parameters
    ----------
    entry: AlgorithmEntry
    dataset_targets: Optional[int]

    Returns
    -------
    Dict[str, Any]
    """
    params: Dict[str, Any] = {
        "p": entry.p,
        "target_count": entry.targets,
        "k_fraction": entry.k_fraction,
        "epsilon": entry.epsilon,
        "reassignment": entry.reassignment,
    }
    accepted = ALGORITHMS[entry.name.value].accepted_params
    if params["target_count"] is None and "target_count" in accepted:
        params["target_count"] = dataset_targets
    return {key: value for key, value in params.items() if value is not None}


def _error_row(dataset_name: str, algorithm: str, error: Exception, n_points: Optional[int] = None) -> Dict[str, Any]:
    return {
        BenchColumns.DATASET: dataset_name,
        BenchColumns.ALGORITHM: algorithm,
        BenchColumns.N_POINTS: n_points,
        BenchColumns.ERROR: f"{BenchConfig.ERROR_MARKER}: {error}",
    }


def run_row(dataset: DataSet, entry: AlgorithmEntry, repeats: int, dataset_targets: Optional[int] = None) -> Dict[str, Any]:
    """
    Run one Algorithm on one DataSet Into a Bench Row

    Failures become an error row instead of raising.

    Parameters
    ----------
    dataset: DataSet
    entry: AlgorithmEntry
    repeats: int
    dataset_targets: Optional[int]

    Returns
    -------
    Dict[str, Any]
    """
    algorithm_name = entry.name.value
    try:
        algorithm = get_algorithm(algorithm_name, **algorithm_params(entry, dataset_targets))
        result = algorithm.run(dataset, repeats=repeats)
    except (ApolloniusError, ValidationError) as error:
        logger.warning("%s on %s failed: %s", algorithm_name, dataset.name, error)
        return _error_row(dataset.name, algorithm_name, error, n_points=dataset.n)
    report = result.report
    return {
        BenchColumns.DATASET: dataset.name,
        BenchColumns.ALGORITHM: algorithm_name,
        BenchColumns.N_POINTS: dataset.n,
        BenchColumns.GROUPS: len({group for group in result.groups if group is not None}),
        BenchColumns.OUTLIERS: sum(group is None for group in result.groups),
        BenchColumns.RI: report.ri,
        BenchColumns.SN: report.sn,
        BenchColumns.VN: report.vn,
        BenchColumns.RUNTIME_SECONDS: report.runtime_seconds,
        BenchColumns.ERROR: "",
    }


def run_bench(manifest: BenchManifest, base_dir: Optional[Path] = None) -> pd.DataFrame:
    """
    Run Every (Dataset, Algorithm) Pair of a Manifest

    Rows come back in manifest order (dataset, then scaling, then algorithm)
    whatever the number of workers.

    Parameters
    ----------
    manifest: BenchManifest
    base_dir: Optional[Path]
        Directory that relative dataset paths are resolved against

    Returns
    -------
    pd.DataFrame
    """
    if manifest.is_empty:
        raise InvalidParameter("the bench manifest lists no datasets or no algorithms")
    repeats = manifest.repeats if manifest.timing else 1
    rows: Dict[_RowKey, Dict[str, Any]] = {}
    tasks: List[Tuple[_RowKey, DataSet, AlgorithmEntry, Optional[int]]] = []
    for dataset_index, dataset_entry in enumerate(manifest.datasets):
        try:
            variants = dataset_variants(dataset_entry, load_dataset_entry(dataset_entry, base_dir))
        except (ApolloniusError, ValidationError) as error:
            logger.warning("Dataset %s could not be loaded: %s", dataset_entry.name, error)
            for algorithm_index, algorithm_entry in enumerate(manifest.algorithms):
                rows[(dataset_index, 0, algorithm_index)] = _error_row(
                    dataset_entry.name, algorithm_entry.name.value, error
                )
            continue
        for scaling_index, (_, dataset) in enumerate(variants):
            for algorithm_index, algorithm_entry in enumerate(manifest.algorithms):
                tasks.append(
                    (
                        (dataset_index, scaling_index, algorithm_index),
                        dataset,
                        algorithm_entry,
                        dataset_entry.targets,
                    )
                )
    logger.info("Running %s bench rows on %s worker(s)", len(tasks), manifest.workers)
    if manifest.workers > 1:
        with ThreadPoolExecutor(max_workers=manifest.workers) as executor:
            results = list(
                executor.map(lambda task: run_row(task[1], task[2], repeats, task[3]), tasks)
            )
    else:
        results = [run_row(dataset, entry, repeats, targets) for _, dataset, entry, targets in tasks]
    for (key, *_), row in zip(tasks, results):
        rows[key] = row
    frame = pd.DataFrame([rows[key] for key in sorted(rows)], columns=BenchColumns.ORDER)
    for column in (BenchColumns.N_POINTS, BenchColumns.GROUPS, BenchColumns.OUTLIERS):
        frame[column] = frame[column].astype("Int64")
    if not manifest.timing:
        frame = frame.drop(columns=[BenchColumns.RUNTIME_SECONDS])
    return frame


def bench_succeeded(frame: pd.DataFrame) -> bool:
    """
    Whether at least one bench row ran without an error
    """
    return bool((frame[BenchColumns.ERROR] == "").any())


def format_bench_table(frame: pd.DataFrame) -> str:
    """
    CSV text of a bench table, floats in their shortest round-trip form
    """
    return frame.to_csv(index=False, na_rep="", float_format=_float_text, lineterminator="\n")


def write_bench_table(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    """
    Write a Bench Table as CSV

    Parameters
    ----------
    frame: pd.DataFrame
    path: Union[str, Path]

    Returns
    -------
    Path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_bench_table(frame), encoding="utf-8")
    logger.debug("Bench table written to %s", path)
    return path


def complexity_report(
    sizes: Sequence[int] = BenchConfig.DEFAULT_SCALING_SIZES,
    targets: int = BenchConfig.DEFAULT_SCALING_TARGETS,
    repeats: int = BenchConfig.DEFAULT_REPEATS,
    seed: int = GeneratorConfig.DEFAULT_SEED,
) -> pd.DataFrame:
    """
    Time NCAR on Ring Datasets of Growing Size

    Each size is spread evenly over `targets` Gaussian clusters, so the reported
    `n_points` is the size rounded to a multiple of `targets`. Distances are
    computed inside the timed call, the quadratic step included.

    Parameters
    ----------
    sizes: Sequence[int]
    targets: int
    repeats: int
    seed: int

    Returns
    -------
    pd.DataFrame
        n_points, median runtime and the ratio to the previous size
    """
    if not sizes:
        raise InvalidParameter("the complexity report needs at least one size")
    if targets < 2:  # noqa: PLR2004
        raise InvalidParameter("the complexity report needs at least two targets")
    algorithm = NcarAlgorithm(target_count=targets)
    records: List[Dict[str, Any]] = []
    previous: Optional[float] = None
    for size in sorted(sizes):
        per_cluster = max(1, math.floor(size / targets + 0.5))
        dataset = generate_gaussian_rings(targets, per_cluster, seed=seed)
        _, runtime = algorithm.timed_partition(dataset, repeats=repeats)
        ratio = runtime / previous if previous else np.nan
        logger.info("n=%s: %.4fs", dataset.n, runtime)
        records.append(
            {
                ScalingColumns.N_POINTS: dataset.n,
                ScalingColumns.RUNTIME_SECONDS: runtime,
                ScalingColumns.RATIO: ratio,
            }
        )
        previous = runtime
    return pd.DataFrame(records)
