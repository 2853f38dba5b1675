"""
Logging and Console Table Utilities
"""

import logging
import math
from typing import Any, Optional

import pandas as pd
from rich.console import Console
from rich.table import Table

logger = logging.getLogger(__name__)

APOLLONIUS_LEVEL = logging.INFO + 1


def log_apollonius(self: logging.Logger, message: str, *args, **kwargs) -> None:
    """
    Custom Logging Level for CLI Banner and Exit Lines

    Between logging.INFO and logging.WARNING (21)

    Parameters
    ----------
    self: logging.Logger
    message: str
        Message String
    args
    kwargs

    Returns
    -------
    None
    """
    logging.addLevelName(level=APOLLONIUS_LEVEL, levelName="APOLLONIUS")
    if self.isEnabledFor(level=APOLLONIUS_LEVEL):
        self._log(level=APOLLONIUS_LEVEL, msg=message, args=args, **kwargs)


def format_cell(value: Any) -> str:
    """
    Render a table value, blank for missing numbers
    """
    if value is None or value is pd.NA:
        return ""
    if isinstance(value, float):
        if math.isnan(value):
            return ""
        return f"{value:.4f}"
    return str(value)


def frame_to_table(frame: pd.DataFrame, title: Optional[str] = None) -> Table:
    """
    Convert a DataFrame into a rich Table

    Parameters
    ----------
    frame: pd.DataFrame
    title: Optional[str]

    Returns
    -------
    Table
    """
    table = Table(title=title, show_lines=False)
    for column in frame.columns:
        numeric = pd.api.types.is_numeric_dtype(frame[column])
        table.add_column(str(column), justify="right" if numeric else "left")
    for row in frame.itertuples(index=False):
        table.add_row(*(format_cell(value) for value in row))
    return table


def print_table(
    frame: pd.DataFrame,
    title: Optional[str] = None,
    console: Optional[Console] = None,
) -> None:
    """
    Print a DataFrame as a rich Table
    """
    (console or Console()).print(frame_to_table(frame, title=title))
