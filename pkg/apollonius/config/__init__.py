"""
Config __init__ file
"""

from .algorithm_config import (
    AlgorithmOptions,
    BaselineDefaults,
    BenchConfig,
    DensityConfig,
    GeneratorConfig,
    GeometryConfig,
    ReassignmentStrategy,
)
from .data_columns import BenchColumns, ResultFields, ScalingColumns
from .file_config import FileConfig

__all__ = [
    "AlgorithmOptions",
    "BaselineDefaults",
    "BenchConfig",
    "BenchColumns",
    "DensityConfig",
    "FileConfig",
    "GeneratorConfig",
    "GeometryConfig",
    "ReassignmentStrategy",
    "ResultFields",
    "ScalingColumns",
]
