"""
apollonius __init__ file
"""

from ._version import __application__, __version__
from .algorithms import ALGORITHMS, get_algorithm
from .containers import DataSet, NcarParams, Partition, RunResult
from .data import fig8_fixture, load_csv
from .metrics import rand_index
from .ncar import run_ncar, run_ncar_detailed

__all__ = [
    "__version__",
    "__application__",
    "ALGORITHMS",
    "DataSet",
    "NcarParams",
    "Partition",
    "RunResult",
    "fig8_fixture",
    "get_algorithm",
    "load_csv",
    "rand_index",
    "run_ncar",
    "run_ncar_detailed",
]
