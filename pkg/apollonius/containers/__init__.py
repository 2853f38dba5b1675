"""
apollonius Data Storage Objects
"""

from .algorithm_params import BaselineConfig, BaselineMethod, NcarParams
from .base_container import ApolloniusModel
from .bench_model import AlgorithmEntry, BenchManifest, DatasetEntry, ScalingOption
from .data_containers import (
    OUTLIER,
    UNASSIGNED,
    ApolloniusRegion,
    BlobSpec,
    Circle,
    DataSet,
    DataSource,
    DensityProfile,
    FarthestPoint,
    GroupRecord,
    KSequenceStep,
    MetricsReport,
    NcarResult,
    Partition,
    Point,
    Provenance,
    RegionForm,
    RunResult,
    Side,
    TargetPairing,
)

__all__ = [
    "OUTLIER",
    "UNASSIGNED",
    "AlgorithmEntry",
    "ApolloniusModel",
    "ApolloniusRegion",
    "BlobSpec",
    "BaselineConfig",
    "BaselineMethod",
    "BenchManifest",
    "Circle",
    "DataSet",
    "DataSource",
    "DatasetEntry",
    "DensityProfile",
    "FarthestPoint",
    "GroupRecord",
    "KSequenceStep",
    "MetricsReport",
    "NcarParams",
    "NcarResult",
    "Partition",
    "Point",
    "Provenance",
    "RegionForm",
    "RunResult",
    "ScalingOption",
    "Side",
    "TargetPairing",
]
