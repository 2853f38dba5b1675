"""
apollonius DataSet Sources
"""

from .csv_io import load_csv, normalize_zscore, save_csv
from .fixtures import FIG8_NOTE, FIG8_PARAMS, fig8_fixture
from .generators import (
    blob_layout,
    generate_blobs_with_outliers,
    generate_gaussian_rings,
    parse_generator_spec,
)

__all__ = [
    "FIG8_NOTE",
    "FIG8_PARAMS",
    "blob_layout",
    "fig8_fixture",
    "generate_blobs_with_outliers",
    "generate_gaussian_rings",
    "load_csv",
    "normalize_zscore",
    "parse_generator_spec",
    "save_csv",
]
