"""
Project Configuration for Result File Keys and Table Columns
"""


class ResultFields:
    """
    Result File Metadata Keys
    """

    HEADER_PREFIX: str = "# apollonius-result v"
    SEPARATOR: str = "---"
    ALGORITHM: str = "algorithm"
    DATASET: str = "dataset"
    N_POINTS: str = "n_points"
    DIMENSIONS: str = "dimensions"
    PARAMS: str = "params"
    RI: str = "ri"
    SN: str = "sn"
    VN: str = "vn"
    RUNTIME_SECONDS: str = "runtime_seconds"
    TARGETS: str = "targets"
    CIRCLES: str = "circles"
    POINT_ID: str = "point_id"
    GROUP: str = "group"
    OUTLIER_GROUP: str = "outlier"


class BenchColumns:
    """
    Bench Table Columns
    """

    DATASET: str = "dataset"
    ALGORITHM: str = "algorithm"
    N_POINTS: str = "n_points"
    GROUPS: str = "groups"
    OUTLIERS: str = "outliers"
    RI: str = "ri"
    SN: str = "sn"
    VN: str = "vn"
    RUNTIME_SECONDS: str = "runtime_seconds"
    ERROR: str = "error"

    ORDER = [DATASET, ALGORITHM, N_POINTS, GROUPS, OUTLIERS, RI, SN, VN, RUNTIME_SECONDS, ERROR]


class ScalingColumns:
    """
    Complexity Table Columns
    """

    N_POINTS: str = "n_points"
    RUNTIME_SECONDS: str = "runtime_seconds"
    RATIO: str = "ratio_to_previous"
