"""
Apollonius Regions: Construction, Side Classification and Membership
"""

import logging
import math
from typing import List, Union

import numpy as np

from apollonius.config import GeometryConfig
from apollonius.containers import ApolloniusRegion, Point, RegionForm, Side
from apollonius.exceptions import (
    CoincidentFoci,
    DegenerateRatio,
    DimensionMismatch,
    InvalidParameter,
)

logger = logging.getLogger(__name__)

PointLike = Union[Point, np.ndarray]


def _vector(point: PointLike) -> np.ndarray:
    if isinstance(point, Point):
        return point.vector
    return np.asarray(point, dtype=float)


def _check_dimensions(*vectors: np.ndarray) -> None:
    dimensions = {vector.shape[-1] for vector in vectors}
    if len(dimensions) > 1:
        raise DimensionMismatch(f"points of mixed dimension: {sorted(dimensions)}")


def _boundary_band(k: float) -> float:
    return GeometryConfig.BOUNDARY_TOLERANCE * max(1.0, k)


def _bisector_band(region: ApolloniusRegion) -> float:
    focal_distance = float(np.linalg.norm(region.focus_a.vector - region.focus_b.vector))
    return GeometryConfig.BOUNDARY_TOLERANCE * max(1.0, focal_distance)


def ratio(a: PointLike, b: PointLike, m: PointLike) -> float:
    """
    Distance Ratio d(a, m) / d(m, b)

    Parameters
    ----------
    a: PointLike
        First focus
    b: PointLike
        Second focus
    m: PointLike
        The measured point

    Returns
    -------
    float

    Raises
    ------
    DegenerateRatio
        When `m` coincides with `b`; the caller treats `m` as interior to B's side
    """
    a_vector, b_vector, m_vector = _vector(a), _vector(b), _vector(m)
    _check_dimensions(a_vector, b_vector, m_vector)
    distance_to_b = float(np.linalg.norm(m_vector - b_vector))
    if distance_to_b <= GeometryConfig.COINCIDENCE_TOLERANCE:
        raise DegenerateRatio("the ratio point coincides with focus B")
    return float(np.linalg.norm(a_vector - m_vector)) / distance_to_b


def apollonius_region(a: Point, b: Point, k: float) -> ApolloniusRegion:
    """
    Build the Apollonius Region of Foci `a`, `b` and Ratio `k`

    For k < 1 the region is the ball enclosing `a`, for k > 1 the ball enclosing
    `b`, and at k == 1 (within tolerance) it is the perpendicular bisector. The
    center is (a - k^2 b) / (1 - k^2) and the radius k d(a, b) / |1 - k^2|, in any
    dimension.

    Parameters
    ----------
    a: Point
    b: Point
    k: float

    Returns
    -------
    ApolloniusRegion
    """
    if not math.isfinite(k) or k <= 0:
        raise InvalidParameter(f"the Apollonius ratio must be a positive number, got {k}")
    a_vector, b_vector = a.vector, b.vector
    _check_dimensions(a_vector, b_vector)
    focal_distance = float(np.linalg.norm(a_vector - b_vector))
    if focal_distance <= GeometryConfig.COINCIDENCE_TOLERANCE:
        raise CoincidentFoci(f"foci {a.id} and {b.id} coincide")
    if abs(k - 1.0) <= GeometryConfig.BISECTOR_TOLERANCE:
        return ApolloniusRegion(
            focus_a=a, focus_b=b, k=k, form=RegionForm.bisector_line
        )
    k_squared = k * k
    center = (a_vector - k_squared * b_vector) / (1.0 - k_squared)
    radius = k * focal_distance / abs(1.0 - k_squared)
    form = RegionForm.sphere_side_a if k < 1 else RegionForm.sphere_side_b
    return ApolloniusRegion(
        focus_a=a,
        focus_b=b,
        k=k,
        form=form,
        center=tuple(center.tolist()),
        radius=radius,
    )


def side_of(region: ApolloniusRegion, m: PointLike) -> Side:
    """
    Classify a Point Against an Apollonius Region

    Parameters
    ----------
    region: ApolloniusRegion
    m: PointLike

    Returns
    -------
    Side
    """
    return side_of_many(region, _vector(m).reshape(1, -1))[0]


def _ratios(region: ApolloniusRegion, coords: np.ndarray) -> np.ndarray:
    """
    Ratios of every row, +inf where the row coincides with focus B
    """
    to_a = np.linalg.norm(coords - region.focus_a.vector, axis=1)
    to_b = np.linalg.norm(coords - region.focus_b.vector, axis=1)
    degenerate = to_b <= GeometryConfig.COINCIDENCE_TOLERANCE
    safe = np.where(degenerate, 1.0, to_b)
    return np.where(degenerate, np.inf, to_a / safe)


def side_of_many(region: ApolloniusRegion, coords: np.ndarray) -> List[Side]:
    """
    Classify every Row of a Coordinate Matrix Against a Region

    Parameters
    ----------
    region: ApolloniusRegion
    coords: np.ndarray
        An n x m coordinate matrix

    Returns
    -------
    List[Side]
    """
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    _check_dimensions(coords, region.focus_a.vector)
    if region.form == RegionForm.bisector_line:
        to_a = np.linalg.norm(coords - region.focus_a.vector, axis=1)
        to_b = np.linalg.norm(coords - region.focus_b.vector, axis=1)
        on_line = np.abs(to_a - to_b) <= _bisector_band(region)
        return [Side.on_boundary if flag else Side.outside for flag in on_line]
    ratios = _ratios(region, coords)
    boundary = np.abs(ratios - region.k) <= _boundary_band(region.k)
    if region.form == RegionForm.sphere_side_b:
        inside = ratios > region.k
    else:
        inside = ratios < region.k
    sides: List[Side] = []
    for on_boundary, is_inside in zip(boundary, inside):
        if on_boundary:
            sides.append(Side.on_boundary)
        elif is_inside:
            sides.append(Side.inside)
        else:
            sides.append(Side.outside)
    return sides


def covered_mask(region: ApolloniusRegion, coords: np.ndarray) -> np.ndarray:
    """
    Closed-Ball Membership of every Row

    Inside and OnBoundary rows are covered; a bisector covers nothing.

    Parameters
    ----------
    region: ApolloniusRegion
    coords: np.ndarray

    Returns
    -------
    np.ndarray
        Boolean mask
    """
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    if region.form == RegionForm.bisector_line:
        return np.zeros(coords.shape[0], dtype=bool)
    sides = side_of_many(region, coords)
    return np.array([side != Side.outside for side in sides], dtype=bool)


def contains(region: ApolloniusRegion, m: PointLike) -> bool:
    """
    Whether a Point Lies in the Closed Region
    """
    return bool(covered_mask(region, _vector(m).reshape(1, -1))[0])
