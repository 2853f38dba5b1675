"""
apollonius result files and plots
"""

from .plotting import plot_decision_graph, plot_result
from .results import format_result, parse_result, read_result, write_result

__all__ = [
    "format_result",
    "parse_result",
    "plot_decision_graph",
    "plot_result",
    "read_result",
    "write_result",
]
