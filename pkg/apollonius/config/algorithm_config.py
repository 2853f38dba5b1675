"""
Project Configuration for Algorithm Defaults and Tolerances
"""

from enum import Enum


class GeometryConfig:
    """
    Apollonius Geometry Tolerances
    """

    # |k - 1| at or below this is the perpendicular bisector
    BISECTOR_TOLERANCE: float = 1e-9
    # |ratio - k| <= BOUNDARY_TOLERANCE * max(1, k) is on the boundary
    BOUNDARY_TOLERANCE: float = 1e-9
    # distances at or below this count as coincident points
    COINCIDENCE_TOLERANCE: float = 1e-12


class DensityConfig:
    """
    Target Point (Step 1) Configuration
    """

    DEFAULT_P: float = 0.05


class BaselineDefaults:
    """
    Comparison Algorithm Defaults
    """

    KNN1_FRACTION: float = 0.05
    KNN2_FRACTION: float = 0.10
    EPSILON_K: int = 4


class BenchConfig:
    """
    Benchmark and Result File Configuration
    """

    DEFAULT_REPEATS: int = 3
    RESULT_FORMAT_VERSION: int = 1
    DEFAULT_SCALING_SIZES = (500, 1000, 2000)
    DEFAULT_SCALING_TARGETS: int = 15
    ERROR_MARKER: str = "ERROR"


class GeneratorConfig:
    """
    Synthetic Dataset Defaults
    """

    DEFAULT_SEED: int = 15
    RING_RADIUS: float = 10.0
    RING_SIGMA: float = 0.4
    BLOB_SEPARATION: float = 10.0
    BLOB_SIGMA: float = 0.5
    # outliers sit this many blob diameters away from every blob center
    OUTLIER_DIAMETERS: float = 10.0
    OUTLIER_LABEL: str = "outlier"


class AlgorithmOptions(str, Enum):
    """
    Enumeration of the Registered Algorithms
    """

    ncar = "ncar"
    knn1 = "knn1"
    knn2 = "knn2"
    epsilon = "epsilon"
    dpc = "dpc"
    dpc_knn = "dpc-knn"


class ReassignmentStrategy(str, Enum):
    """
    How uncovered and overlapping points pick their group
    """

    mean_distance = "mean-distance"
    nearest_center = "nearest-center"
