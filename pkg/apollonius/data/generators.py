"""
Seeded Synthetic DataSets
"""

import logging
import math
import re
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.spatial.distance import pdist

from apollonius.config import GeneratorConfig
from apollonius.containers import BlobSpec, DataSet, DataSource
from apollonius.data.fixtures import fig8_fixture
from apollonius.exceptions import InvalidParameter

logger = logging.getLogger(__name__)

_RINGS_PATTERN = re.compile(r"^rings:(?P<clusters>\d+)x(?P<points>\d+)$")
_BLOBS_PATTERN = re.compile(r"^blobs:(?P<blobs>\d+)x(?P<points>\d+)(\+(?P<outliers>\d+))?$")
# clusters that fit on a single ring before an inner ring is added
_SINGLE_RING_LIMIT = 8


def random_generator(seed: int) -> np.random.Generator:
    """
    PCG64 Generator for a Seed
    """
    return np.random.Generator(np.random.PCG64(seed))


def _ring(count: int, radius: float, phase: float = 0.0) -> np.ndarray:
    angles = phase + 2 * math.pi * np.arange(count) / count
    return radius * np.column_stack([np.cos(angles), np.sin(angles)])


def ring_centers(cluster_count: int, ring_radius: float) -> np.ndarray:
    """
    Cluster Centers Laid Out on Concentric Rings

    One cluster sits at the origin; up to eight share one ring; larger counts
    get a center cluster, an inner ring at half the radius and an outer ring.

    Parameters
    ----------
    cluster_count: int
    ring_radius: float

    Returns
    -------
    np.ndarray
        cluster_count x 2
    """
    if cluster_count == 1:
        return np.zeros((1, 2))
    if cluster_count <= _SINGLE_RING_LIMIT:
        return _ring(cluster_count, ring_radius)
    inner = (cluster_count - 1) // 2
    outer = cluster_count - 1 - inner
    return np.vstack(
        [
            np.zeros((1, 2)),
            _ring(inner, ring_radius / 2),
            _ring(outer, ring_radius, phase=math.pi / outer),
        ]
    )


def generate_gaussian_rings(
    cluster_count: int,
    points_per_cluster: int,
    ring_radius: float = GeneratorConfig.RING_RADIUS,
    sigma: float = GeneratorConfig.RING_SIGMA,
    seed: int = GeneratorConfig.DEFAULT_SEED,
) -> DataSet:
    """
    Isotropic Gaussian Clusters Positioned in Rings

    Parameters
    ----------
    cluster_count: int
    points_per_cluster: int
    ring_radius: float
    sigma: float
    seed: int

    Returns
    -------
    DataSet
        Labelled by cluster id
    """
    if cluster_count < 1 or points_per_cluster < 1:
        raise InvalidParameter("rings need at least one cluster and one point per cluster")
    if cluster_count * points_per_cluster < 2:  # noqa: PLR2004
        raise InvalidParameter("a dataset needs at least two points")
    if sigma <= 0 or ring_radius <= 0:
        raise InvalidParameter("sigma and ring radius must be positive")
    rng = random_generator(seed)
    centers = ring_centers(cluster_count, ring_radius)
    labels = np.repeat(np.arange(cluster_count), points_per_cluster)
    points = centers[labels] + rng.normal(0.0, sigma, size=(labels.shape[0], 2))
    return DataSet(
        name=f"rings:{cluster_count}x{points_per_cluster}",
        points=points,
        labels=tuple(int(label) for label in labels),
        label_names=tuple(str(cluster) for cluster in range(cluster_count)),
        source=DataSource.generator,
    )


def blob_layout(
    blob_count: int,
    points_per_blob: int,
    separation: float = GeneratorConfig.BLOB_SEPARATION,
    sigma: float = GeneratorConfig.BLOB_SIGMA,
) -> List[BlobSpec]:
    """
    Blobs Evenly Spaced on a Circle, Neighbors `separation` Apart
    """
    if blob_count < 1 or points_per_blob < 1:
        raise InvalidParameter("blobs need at least one blob and one point per blob")
    if separation <= 0 or sigma <= 0:
        raise InvalidParameter("separation and sigma must be positive")
    if blob_count == 1:
        centers = np.zeros((1, 2))
    else:
        centers = _ring(blob_count, separation / (2 * math.sin(math.pi / blob_count)))
    return [
        BlobSpec(center=center.tolist(), sigma=sigma, count=points_per_blob)
        for center in centers
    ]


def generate_blobs_with_outliers(
    blob_specs: Sequence[BlobSpec],
    outlier_count: int = 0,
    placement_distance: Optional[float] = None,
    seed: int = GeneratorConfig.DEFAULT_SEED,
) -> DataSet:
    """
    Gaussian Blobs with Planted Outliers

    Outliers are spread evenly (with seeded jitter) on a circle around the blob
    centroid, far enough that each one is at least `placement_distance` from every
    blob center. They carry the reserved "outlier" label.

    Parameters
    ----------
    blob_specs: Sequence[BlobSpec]
    outlier_count: int
    placement_distance: Optional[float]
        Defaults to ten times the largest blob diameter
    seed: int

    Returns
    -------
    DataSet
    """
    if not blob_specs:
        raise InvalidParameter("at least one blob is needed")
    if outlier_count < 0:
        raise InvalidParameter("the outlier count cannot be negative")
    dimensions = {len(spec.center) for spec in blob_specs}
    if len(dimensions) > 1:
        raise InvalidParameter("all blob centers need the same dimension")
    dimension = dimensions.pop()
    rng = random_generator(seed)
    samples = [
        np.asarray(spec.center) + rng.normal(0.0, spec.sigma, size=(spec.count, dimension))
        for spec in blob_specs
    ]
    diameter = max(
        float(pdist(sample).max()) if sample.shape[0] > 1 else 0.0 for sample in samples
    )
    if sum(spec.count for spec in blob_specs) + outlier_count < 2:  # noqa: PLR2004
        raise InvalidParameter("a dataset needs at least two points")
    if placement_distance is None:
        widest = max(diameter, max(spec.sigma for spec in blob_specs))
        placement_distance = GeneratorConfig.OUTLIER_DIAMETERS * widest
    elif outlier_count and placement_distance <= diameter:
        raise InvalidParameter(
            f"placement distance {placement_distance:.4g} does not exceed the blob diameter {diameter:.4g}"
        )
    labels = [index for index, sample in enumerate(samples) for _ in range(sample.shape[0])]
    label_names = [str(index) for index in range(len(blob_specs))]
    points = list(samples)
    if outlier_count:
        centers = np.array([spec.center for spec in blob_specs], dtype=float)
        centroid = centers.mean(axis=0)
        spread = float(np.linalg.norm(centers - centroid, axis=1).max())
        step = 2 * math.pi / outlier_count
        angles = step * np.arange(outlier_count) + rng.uniform(-0.25, 0.25, outlier_count) * step
        directions = np.zeros((outlier_count, dimension))
        directions[:, 0] = np.cos(angles)
        if dimension > 1:
            directions[:, 1] = np.sin(angles)
        points.append(centroid + (placement_distance + spread) * directions)
        labels.extend([len(blob_specs)] * outlier_count)
        label_names.append(GeneratorConfig.OUTLIER_LABEL)
    total = sum(spec.count for spec in blob_specs)
    logger.debug(
        "Generated %s blob points and %s outliers at distance %.4g",
        total,
        outlier_count,
        placement_distance,
    )
    return DataSet(
        name=f"blobs:{len(blob_specs)}x{blob_specs[0].count}+{outlier_count}",
        points=np.vstack(points),
        labels=labels,
        label_names=label_names,
        source=DataSource.generator,
    )


def _options(text: str) -> Dict[str, float]:
    options: Dict[str, float] = {}
    for item in filter(None, text.split(",")):
        key, separator, value = item.partition("=")
        if not separator:
            raise InvalidParameter(f"generator option {item!r} is not key=value")
        try:
            options[key.strip()] = float(value)
        except ValueError as error:
            raise InvalidParameter(f"generator option {item!r} is not a number") from error
    return options


def parse_generator_spec(spec: str, seed: int = GeneratorConfig.DEFAULT_SEED) -> DataSet:
    """
    Build a DataSet from a Generator Spec

    `rings:<clusters>x<points>[,radius=R][,sigma=S]`,
    `blobs:<blobs>x<points>[+<outliers>][,separation=D][,sigma=S]` or `fig8`.

    Parameters
    ----------
    spec: str
    seed: int

    Returns
    -------
    DataSet
    """
    head, _, rest = spec.strip().partition(",")
    head = head.lower()
    options = _options(rest)
    if head == "fig8":
        if options:
            raise InvalidParameter("the fig8 fixture takes no options")
        return fig8_fixture()
    rings = _RINGS_PATTERN.match(head)
    if rings is not None:
        unknown = set(options) - {"radius", "sigma"}
        if unknown:
            raise InvalidParameter(f"unknown rings options: {sorted(unknown)}")
        return generate_gaussian_rings(
            cluster_count=int(rings.group("clusters")),
            points_per_cluster=int(rings.group("points")),
            ring_radius=options.get("radius", GeneratorConfig.RING_RADIUS),
            sigma=options.get("sigma", GeneratorConfig.RING_SIGMA),
            seed=seed,
        )
    blobs = _BLOBS_PATTERN.match(head)
    if blobs is not None:
        unknown = set(options) - {"separation", "sigma"}
        if unknown:
            raise InvalidParameter(f"unknown blobs options: {sorted(unknown)}")
        specs = blob_layout(
            blob_count=int(blobs.group("blobs")),
            points_per_blob=int(blobs.group("points")),
            separation=options.get("separation", GeneratorConfig.BLOB_SEPARATION),
            sigma=options.get("sigma", GeneratorConfig.BLOB_SIGMA),
        )
        return generate_blobs_with_outliers(
            specs, outlier_count=int(blobs.group("outliers") or 0), seed=seed
        )
    raise InvalidParameter(
        f"unknown generator spec {spec!r}, expected rings:<c>x<p>, blobs:<b>x<p>[+<o>] or fig8"
    )
