"""
Evaluation Metrics: Rand Index, Similarity and Variability Neighborhood
"""

import logging
from typing import Any, Dict, NamedTuple, Optional, Sequence, Union

import numpy as np
from scipy.special import comb

from apollonius.containers import OUTLIER, DataSet, MetricsReport, Partition
from apollonius.exceptions import InvalidParameter, LengthMismatch

logger = logging.getLogger(__name__)

Labels = Union[Partition, Sequence[int], np.ndarray]


class PairCounts(NamedTuple):
    """
    Pair Counts Behind the Rand Index

    a: same cluster, same class
    b: same cluster, different class
    c: different cluster, same class
    d: different cluster, different class
    """

    a: int
    b: int
    c: int
    d: int

    @property
    def total(self) -> int:
        """
        Number of unordered pairs
        """
        return self.a + self.b + self.c + self.d


def _as_labels(labels: Labels) -> np.ndarray:
    if isinstance(labels, Partition):
        return labels.labels()
    return np.asarray(labels, dtype=int)


def _singletons(predicted: np.ndarray) -> np.ndarray:
    """
    Give every outlier its own cluster id
    """
    predicted = predicted.copy()
    outliers = np.flatnonzero(predicted == OUTLIER)
    start = int(predicted.max(initial=-1)) + 1
    predicted[outliers] = np.arange(start, start + outliers.size)
    return predicted


def _dense(labels: np.ndarray) -> np.ndarray:
    return np.unique(labels, return_inverse=True)[1]


def _pairs(counts: np.ndarray) -> int:
    return int(round(float(comb(counts, 2).sum())))


def _check_lengths(predicted: np.ndarray, truth: np.ndarray) -> None:
    if predicted.shape[0] != truth.shape[0]:
        raise LengthMismatch(
            f"{predicted.shape[0]} predicted labels against {truth.shape[0]} classes"
        )


def pair_counts(predicted: Labels, truth: Sequence[int]) -> PairCounts:
    """
    Contingency-Table Pair Counts

    Parameters
    ----------
    predicted: Labels
        Group ids, OUTLIER for outliers (each outlier is its own cluster)
    truth: Sequence[int]
        Class ids

    Returns
    -------
    PairCounts
    """
    predicted_array = _as_labels(predicted)
    truth_array = np.asarray(truth, dtype=int)
    _check_lengths(predicted_array, truth_array)
    if predicted_array.size == 0:
        return PairCounts(a=0, b=0, c=0, d=0)
    clusters = _dense(_singletons(predicted_array))
    classes = _dense(truth_array)
    contingency = np.zeros((clusters.max() + 1, classes.max() + 1), dtype=np.int64)
    np.add.at(contingency, (clusters, classes), 1)
    a = _pairs(contingency)
    same_cluster = _pairs(contingency.sum(axis=1))
    same_class = _pairs(contingency.sum(axis=0))
    total = _pairs(np.array([clusters.shape[0]]))
    b = same_cluster - a
    c = same_class - a
    return PairCounts(a=a, b=b, c=c, d=total - a - b - c)


def rand_index(predicted: Labels, truth: Sequence[int]) -> float:
    """
    Rand Index (a + d) / (a + b + c + d)

    Parameters
    ----------
    predicted: Labels
    truth: Sequence[int]

    Returns
    -------
    float
    """
    counts = pair_counts(predicted, truth)
    if counts.total == 0:
        raise InvalidParameter("the Rand index needs at least two points")
    return (counts.a + counts.d) / counts.total


def similarity_neighborhood(partition: Labels, truth: Sequence[int]) -> float:
    """
    Similarity Neighborhood

    Each point scores the share of its group-mates that have its class, or 1 when
    it has no group-mates (outliers included). The result is the mean over all
    points.

    Parameters
    ----------
    partition: Labels
    truth: Sequence[int]

    Returns
    -------
    float
    """
    predicted = _singletons(_as_labels(partition))
    truth_array = np.asarray(truth, dtype=int)
    _check_lengths(predicted, truth_array)
    clusters = _dense(predicted)
    classes = _dense(truth_array)
    contingency = np.zeros((clusters.max() + 1, classes.max() + 1), dtype=np.int64)
    np.add.at(contingency, (clusters, classes), 1)
    sizes = contingency.sum(axis=1)[clusters]
    same_class = contingency[clusters, classes]
    mates = sizes - 1
    scores = np.divide(
        same_class - 1, mates, out=np.ones(mates.shape[0], dtype=float), where=mates > 0
    )
    return float(scores.mean())


def variability_neighborhood(partition: Labels, dist: np.ndarray) -> float:
    """
    Variability Neighborhood

    For every point with at least two group-mates the population standard deviation
    of its distances to them is taken; the result is their mean, or 0 when no point
    qualifies. Outliers have no group-mates.

    Parameters
    ----------
    partition: Labels
    dist: np.ndarray

    Returns
    -------
    float
    """
    labels = _as_labels(partition)
    if labels.shape[0] != dist.shape[0]:
        raise LengthMismatch(f"{labels.shape[0]} labels for {dist.shape[0]} points")
    terms = []
    for group_id in np.unique(labels[labels != OUTLIER]):
        members = np.flatnonzero(labels == group_id)
        size = members.shape[0]
        if size < 3:  # noqa: PLR2004
            continue
        within = dist[np.ix_(members, members)]
        mates = within[~np.eye(size, dtype=bool)].reshape(size, size - 1)
        terms.append(mates.std(axis=1))
    if not terms:
        return 0.0
    return float(np.concatenate(terms).mean())


def evaluate(
    algorithm: str,
    dataset: DataSet,
    partition: Partition,
    dist: np.ndarray,
    runtime_seconds: float,
    params: Optional[Dict[str, Any]] = None,
) -> MetricsReport:
    """
    Build a MetricsReport

    RI and SN are only computed when the dataset carries class labels.

    Parameters
    ----------
    algorithm: str
    dataset: DataSet
    partition: Partition
    dist: np.ndarray
    runtime_seconds: float
    params: Optional[Dict[str, Any]]

    Returns
    -------
    MetricsReport
    """
    ri: Optional[float] = None
    sn: Optional[float] = None
    if dataset.labels is not None:
        ri = rand_index(partition, dataset.labels)
        sn = similarity_neighborhood(partition, dataset.labels)
    vn = variability_neighborhood(partition, dist)
    logger.debug("%s on %s: RI=%s SN=%s VN=%.6g", algorithm, dataset.name, ri, sn, vn)
    return MetricsReport(
        algorithm=algorithm,
        dataset=dataset.name,
        ri=ri,
        sn=sn,
        vn=vn,
        runtime_seconds=runtime_seconds,
        params=params or {},
    )
