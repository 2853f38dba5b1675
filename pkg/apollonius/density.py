"""
Local Density, Separation and Target Point Selection
"""

import logging
import math
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.spatial.distance import pdist, squareform

from apollonius.config import DensityConfig, GeometryConfig
from apollonius.containers import DensityProfile, Point
from apollonius.exceptions import DimensionMismatch, EmptySelection, InvalidParameter

logger = logging.getLogger(__name__)


def points_matrix(points: Union[Sequence[Point], np.ndarray]) -> np.ndarray:
    """
    Stack Points into an n x m Matrix

    Parameters
    ----------
    points: Union[Sequence[Point], np.ndarray]

    Returns
    -------
    np.ndarray
    """
    if isinstance(points, np.ndarray):
        matrix = np.asarray(points, dtype=float)
        if matrix.ndim != 2:  # noqa: PLR2004
            raise DimensionMismatch(f"expected an n x m matrix, got shape {matrix.shape}")
        return matrix
    dimensions = {point.dimensions for point in points}
    if len(dimensions) > 1:
        raise DimensionMismatch(f"points of mixed dimension: {sorted(dimensions)}")
    return np.array([point.coords for point in points], dtype=float)


def distance_matrix(points: Union[Sequence[Point], np.ndarray]) -> np.ndarray:
    """
    Pairwise Euclidean Distances

    Parameters
    ----------
    points: Union[Sequence[Point], np.ndarray]

    Returns
    -------
    np.ndarray
        Symmetric n x n matrix with a zero diagonal
    """
    matrix = points_matrix(points)
    if matrix.shape[0] < 2:  # noqa: PLR2004
        raise InvalidParameter("distances need at least two points")
    return squareform(pdist(matrix, metric="euclidean"))


def neighbor_count(n: int, p: float) -> int:
    """
    r = round(p n), half up, clamped to [1, n - 1]
    """
    return max(1, min(n - 1, int(math.floor(p * n + 0.5))))


def local_density(dist: np.ndarray, p: float = DensityConfig.DEFAULT_P) -> Tuple[np.ndarray, int]:
    """
    Gaussian Local Density over the r Nearest Neighbors

    rho_i = exp(-(1/r) * sum of squared distances to the r nearest neighbors of i)

    Parameters
    ----------
    dist: np.ndarray
        Distance matrix
    p: float
        Neighbor fraction, r = round(p n)

    Returns
    -------
    Tuple[np.ndarray, int]
        rho and r
    """
    if not 0 < p < 1:
        raise InvalidParameter(f"p must lie in (0, 1), got {p}")
    n = dist.shape[0]
    if n < 2:  # noqa: PLR2004
        raise InvalidParameter("local density needs at least two points")
    r = neighbor_count(n, p)
    others = np.array(dist, dtype=float, copy=True)
    np.fill_diagonal(others, np.inf)
    nearest = np.partition(others, r - 1, axis=1)[:, :r]
    rho = np.exp(-np.sum(nearest**2, axis=1) / r)
    # an underflowed kernel still has to be a positive density
    rho = np.maximum(rho, np.finfo(float).tiny)
    logger.debug("Local density computed with r=%s over %s points", r, n)
    return rho, r


def delta_and_score(
    dist: np.ndarray, rho: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, List[Optional[int]]]:
    """
    Separation Distance, Score and Nearest Higher-Density Point

    delta_i is the distance to the nearest strictly denser point, or the largest
    distance from i when no denser point exists. Ties in distance go to the
    lowest index.

    Parameters
    ----------
    dist: np.ndarray
    rho: np.ndarray

    Returns
    -------
    Tuple[np.ndarray, np.ndarray, List[Optional[int]]]
        delta, score and nearest_higher
    """
    rho = np.asarray(rho, dtype=float)
    n = dist.shape[0]
    if rho.shape != (n,):
        raise DimensionMismatch(f"{rho.shape[0]} densities for {n} points")
    denser = rho[np.newaxis, :] > rho[:, np.newaxis]
    masked = np.where(denser, dist, np.inf)
    nearest = np.argmin(masked, axis=1)
    has_denser = denser.any(axis=1)
    delta = np.where(has_denser, masked[np.arange(n), nearest], dist.max(axis=1))
    score = delta * rho
    nearest_higher = [
        int(index) if flag else None for index, flag in zip(nearest, has_denser)
    ]
    return delta, score, nearest_higher


def rank_by_score(score: Sequence[float]) -> np.ndarray:
    """
    Indices by descending score, ties to the lower index
    """
    score = np.asarray(score, dtype=float)
    return np.lexsort((np.arange(score.shape[0]), -score))


def distinct_ranking(order: Sequence[int], dist: np.ndarray) -> np.ndarray:
    """
    Drop every Point that Coincides with a Better-Ranked Point

    Parameters
    ----------
    order: Sequence[int]
        Point indices in rank order
    dist: np.ndarray

    Returns
    -------
    np.ndarray
        The remaining indices, still in rank order
    """
    order = np.asarray(order, dtype=int)
    coincident = dist[np.ix_(order, order)] <= GeometryConfig.COINCIDENCE_TOLERANCE
    # row i against the ranks above it
    duplicate = np.tril(coincident, k=-1).any(axis=1)
    if duplicate.any():
        logger.debug("Skipping %s duplicate points in the ranking", int(duplicate.sum()))
    return order[~duplicate]


def select_targets(
    score: Sequence[float],
    count: Optional[int] = None,
    dist: Optional[np.ndarray] = None,
) -> List[int]:
    """
    Select Target Points from the Score Ranking

    With an explicit `count` the `count` best-ranked points are returned. Otherwise
    the ranking is cut at the largest ratio between consecutive scores within the
    first min(n - 1, ceil(sqrt(n))) ranks. Given `dist`, copies of a better-ranked
    point leave the ranking first, so no two targets coincide.

    Parameters
    ----------
    score: Sequence[float]
    count: Optional[int]
    dist: Optional[np.ndarray]

    Returns
    -------
    List[int]
        Target indices in rank order
    """
    score = np.asarray(score, dtype=float)
    n = score.shape[0]
    if count is not None and not 1 <= count <= n:
        raise InvalidParameter(f"target count must lie in [1, {n}], got {count}")
    order = rank_by_score(score)
    if dist is not None:
        order = distinct_ranking(order, dist)
    if count is not None:
        if count > order.shape[0]:
            raise InvalidParameter(
                f"target count {count} exceeds the {order.shape[0]} distinct points"
            )
        return [int(index) for index in order[:count]]
    if not np.any(score > 0):
        raise EmptySelection("every score is zero, no targets can be selected")
    if order.shape[0] == 1:
        return [int(order[0])]
    ranked = score[order]
    window = max(1, min(ranked.shape[0] - 1, math.ceil(math.sqrt(ranked.shape[0]))))
    best_cut, best_ratio = 1, -1.0
    for position in range(1, window + 1):
        above, below = ranked[position - 1], ranked[position]
        if below > 0:
            gap = above / below
        elif above > 0:
            gap = math.inf
        else:
            continue
        if gap > best_ratio:
            best_cut, best_ratio = position, gap
    logger.debug("Automatic target cut after rank %s (gap %.4g)", best_cut, best_ratio)
    return [int(index) for index in order[:best_cut]]


def density_profile(dist: np.ndarray, p: float = DensityConfig.DEFAULT_P) -> DensityProfile:
    """
    Compute the Full DensityProfile of a Distance Matrix

    Parameters
    ----------
    dist: np.ndarray
    p: float

    Returns
    -------
    DensityProfile
    """
    rho, r = local_density(dist, p)
    delta, score, nearest_higher = delta_and_score(dist, rho)
    return DensityProfile(
        rho=rho.tolist(),
        delta=delta.tolist(),
        score=score.tolist(),
        nearest_higher=nearest_higher,
        r=r,
    )
