"""
Comparison Algorithms: kNN Graph, Epsilon Graph and Density Peaks
"""

import logging
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from apollonius.config import BaselineDefaults
from apollonius.containers import (
    OUTLIER,
    BaselineConfig,
    BaselineMethod,
    DataSet,
    DensityProfile,
    GroupRecord,
    Partition,
    Provenance,
)
from apollonius.density import (
    density_profile,
    distance_matrix,
    rank_by_score,
    select_targets,
)
from apollonius.exceptions import InvalidParameter

logger = logging.getLogger(__name__)


def _relabel(labels: Sequence[int]) -> List[int]:
    """
    Dense component ids in order of first appearance
    """
    mapping: Dict[int, int] = {}
    relabeled = []
    for label in labels:
        if label == OUTLIER:
            relabeled.append(OUTLIER)
            continue
        if label not in mapping:
            mapping[label] = len(mapping)
        relabeled.append(mapping[label])
    return relabeled


def _graph_partition(assignments: Sequence[int]) -> Partition:
    assignments = [int(label) for label in assignments]
    n_groups = len({label for label in assignments if label != OUTLIER})
    provenance = [
        Provenance.outlier if label == OUTLIER else Provenance.assigned
        for label in assignments
    ]
    return Partition(
        assignments=assignments,
        groups=[GroupRecord(group_id=group_id) for group_id in range(n_groups)],
        outliers=[index for index, label in enumerate(assignments) if label == OUTLIER],
        provenance=provenance,
    )


def _components(adjacency: coo_matrix) -> np.ndarray:
    _, labels = connected_components(adjacency, directed=False)
    return labels


def knn_graph_groups(
    dataset: DataSet, k_fraction: float, dist: Optional[np.ndarray] = None
) -> Partition:
    """
    Connected Components of the Union-Symmetrized kNN Graph

    Parameters
    ----------
    dataset: DataSet
    k_fraction: float
        k = round(k_fraction n), at least 1 and below n
    dist: Optional[np.ndarray]

    Returns
    -------
    Partition
        Never contains outliers
    """
    if dist is None:
        dist = distance_matrix(dataset.points)
    n = dataset.n
    k = max(1, int(np.floor(k_fraction * n + 0.5)))
    if k >= n:
        raise InvalidParameter(f"k={k} neighbors needs more than {n} points")
    others = np.array(dist, dtype=float, copy=True)
    np.fill_diagonal(others, np.inf)
    neighbors = np.argsort(others, axis=1, kind="stable")[:, :k]
    rows = np.repeat(np.arange(n), k)
    graph = coo_matrix(
        (np.ones(rows.shape[0]), (rows, neighbors.ravel())), shape=(n, n)
    )
    labels = _relabel(_components(graph))
    logger.debug("kNN graph with k=%s has %s components", k, max(labels) + 1)
    return _graph_partition(labels)


def k_distance_curve(dist: np.ndarray, k: int = BaselineDefaults.EPSILON_K) -> np.ndarray:
    """
    Sorted k-th Nearest Neighbor Distances (the k-distance graph)

    Parameters
    ----------
    dist: np.ndarray
    k: int
        Clamped to n - 1

    Returns
    -------
    np.ndarray
        Ascending
    """
    n = dist.shape[0]
    k = max(1, min(k, n - 1))
    others = np.array(dist, dtype=float, copy=True)
    np.fill_diagonal(others, np.inf)
    kth = np.partition(others, k - 1, axis=1)[:, k - 1]
    return np.sort(kth)


def auto_epsilon(dist: np.ndarray, k: int = BaselineDefaults.EPSILON_K) -> float:
    """
    Epsilon at the Largest Jump of the k-Distance Graph

    The value just below the largest consecutive gap is returned.

    Parameters
    ----------
    dist: np.ndarray
    k: int

    Returns
    -------
    float
    """
    curve = k_distance_curve(dist, k)
    if curve.shape[0] < 2:  # noqa: PLR2004
        epsilon = float(curve[-1])
    else:
        gaps = np.diff(curve)
        epsilon = float(curve[int(np.argmax(gaps))])
    if epsilon <= 0:
        # only duplicates below the gap: connect exact copies
        epsilon = float(np.finfo(float).eps)
    logger.debug("Automatic epsilon %.6g from the %s-distance graph", epsilon, k)
    return epsilon


def epsilon_groups(
    dataset: DataSet,
    epsilon: Optional[float] = None,
    dist: Optional[np.ndarray] = None,
) -> Partition:
    """
    Connected Components of the Epsilon-Neighborhood Graph

    Components of a single point are outliers.

    Parameters
    ----------
    dataset: DataSet
    epsilon: Optional[float]
        Chosen from the 4-distance graph when absent
    dist: Optional[np.ndarray]

    Returns
    -------
    Partition
    """
    if epsilon is not None and epsilon <= 0:
        raise InvalidParameter(f"epsilon must be positive, got {epsilon}")
    if dist is None:
        dist = distance_matrix(dataset.points)
    if epsilon is None:
        epsilon = auto_epsilon(dist)
    adjacency = dist <= epsilon
    np.fill_diagonal(adjacency, False)
    labels = _components(coo_matrix(adjacency.astype(np.int8)))
    sizes = np.bincount(labels)
    assignments = [OUTLIER if sizes[label] < 2 else int(label) for label in labels]  # noqa: PLR2004
    return _graph_partition(_relabel(assignments))


def _nearest_center(dist: np.ndarray, index: int, centers: Sequence[int]) -> int:
    return int(np.argmin(dist[index, list(centers)]))


def _centers(
    profile: DensityProfile, center_count: Optional[int], dist: np.ndarray
) -> List[int]:
    if center_count is not None and not 1 <= center_count <= profile.n:
        raise InvalidParameter(
            f"center count must lie in [1, {profile.n}], got {center_count}"
        )
    return sorted(select_targets(profile.score, center_count, dist))


def _center_partition(assignments: Sequence[int], centers: Sequence[int]) -> Partition:
    provenance = [Provenance.assigned] * len(assignments)
    for center in centers:
        provenance[center] = Provenance.target
    return Partition(
        assignments=list(assignments),
        groups=[
            GroupRecord(group_id=group_id, target=center)
            for group_id, center in enumerate(centers)
        ],
        provenance=provenance,
    )


def dpc_nearest_center(
    dataset: DataSet,
    p: float,
    center_count: Optional[int] = None,
    dist: Optional[np.ndarray] = None,
) -> Partition:
    """
    Density Peaks Centers, every Other Point Joins its Nearest Center

    Parameters
    ----------
    dataset: DataSet
    p: float
    center_count: Optional[int]
        Automatic selection when absent
    dist: Optional[np.ndarray]

    Returns
    -------
    Partition
        Never contains outliers
    """
    if dist is None:
        dist = distance_matrix(dataset.points)
    centers = _centers(density_profile(dist, p), center_count, dist)
    assignments = [_nearest_center(dist, index, centers) for index in range(dataset.n)]
    for group_id, center in enumerate(centers):
        assignments[center] = group_id
    return _center_partition(assignments, centers)


def dpc_density_chain(
    dataset: DataSet,
    p: float,
    center_count: Optional[int] = None,
    dist: Optional[np.ndarray] = None,
) -> Partition:
    """
    Density Peaks with Label Propagation Down the Density Chain

    Points are visited by decreasing density and inherit the label of their
    nearest denser point; points without one take their nearest center.

    Parameters
    ----------
    dataset: DataSet
    p: float
    center_count: Optional[int]
        Automatic selection when absent
    dist: Optional[np.ndarray]

    Returns
    -------
    Partition
    """
    if dist is None:
        dist = distance_matrix(dataset.points)
    profile = density_profile(dist, p)
    centers = _centers(profile, center_count, dist)
    labels: List[Optional[int]] = [None] * dataset.n
    for group_id, center in enumerate(centers):
        labels[center] = group_id
    for index in rank_by_score(profile.rho):
        index = int(index)
        if labels[index] is not None:
            continue
        higher = profile.nearest_higher[index]
        if higher is not None and labels[higher] is not None:
            labels[index] = labels[higher]
        else:
            labels[index] = _nearest_center(dist, index, centers)
    return _center_partition([int(label) for label in labels], centers)


def run_baseline(
    dataset: DataSet, config: BaselineConfig, dist: Optional[np.ndarray] = None
) -> Partition:
    """
    Dispatch a BaselineConfig to its Algorithm

    Parameters
    ----------
    dataset: DataSet
    config: BaselineConfig
    dist: Optional[np.ndarray]

    Returns
    -------
    Partition
    """
    if config.method == BaselineMethod.knn_graph:
        return knn_graph_groups(dataset, config.k_fraction, dist)
    elif config.method == BaselineMethod.epsilon_graph:
        return epsilon_groups(dataset, config.epsilon, dist)
    elif config.method == BaselineMethod.dpc_nearest_center:
        return dpc_nearest_center(dataset, config.p, config.center_count, dist)
    return dpc_density_chain(dataset, config.p, config.center_count, dist)

