"""
DataSet CSV Reading, Writing and Feature Scaling
"""

import logging
import math
import re
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from apollonius.containers import DataSet, DataSource
from apollonius.exceptions import (
    EmptyDataset,
    InvalidParameter,
    NonNumericFeature,
    ParseError,
)

logger = logging.getLogger(__name__)

LabelColumn = Optional[Union[int, str]]
LAST_COLUMN = "last"


def _to_float(value: str) -> float:
    try:
        return float(value)
    except ValueError:
        return math.nan


def _read_frame(path: Path, delimiter: str, header: bool) -> pd.DataFrame:
    try:
        return pd.read_csv(
            path,
            sep=delimiter,
            header=0 if header else None,
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=True,
            encoding="utf-8",
        )
    except pd.errors.EmptyDataError as empty:
        raise EmptyDataset("the file holds no rows", path=path) from empty
    except pd.errors.ParserError as parse_error:
        message = str(parse_error).strip()
        line = re.search(r"line (\d+)", message)
        raise ParseError(
            message, path=path, row=int(line.group(1)) if line else None
        ) from parse_error
    except UnicodeDecodeError as decode_error:
        raise ParseError("the file is not valid UTF-8", path=path) from decode_error


def _label_position(frame: pd.DataFrame, label_column: LabelColumn, path: Path) -> Optional[int]:
    if label_column is None:
        return None
    width = frame.shape[1]
    if isinstance(label_column, str):
        if label_column.lower() == LAST_COLUMN:
            return width - 1
        if label_column not in frame.columns:
            raise ParseError(f"no column named {label_column!r}", path=path)
        return int(frame.columns.get_loc(label_column))
    position = label_column + width if label_column < 0 else label_column
    if not 0 <= position < width:
        raise ParseError(f"label column {label_column} outside of {width} columns", path=path)
    return position


def load_csv(
    path: Union[str, Path],
    label_column: LabelColumn = LAST_COLUMN,
    delimiter: str = ",",
    header: bool = False,
    name: Optional[str] = None,
) -> DataSet:
    """
    Load a DataSet from a CSV File

    Rows become points in file order. Labels may be any strings; they are mapped
    to dense class ids in order of first appearance.

    Parameters
    ----------
    path: Union[str, Path]
    label_column: LabelColumn
        Column index, header name, "last" or None for unlabeled files
    delimiter: str
    header: bool
        Whether the first line is a header
    name: Optional[str]
        DataSet name, the file stem by default

    Returns
    -------
    DataSet
    """
    path = Path(path)
    if not path.is_file():
        raise ParseError("the file does not exist", path=path)
    frame = _read_frame(path, delimiter, header)
    first_line = 2 if header else 1
    if frame.shape[0] < 2:  # noqa: PLR2004
        raise EmptyDataset(f"{frame.shape[0]} rows, at least two are needed", path=path)
    label_position = _label_position(frame, label_column, path)
    feature_positions = [
        position for position in range(frame.shape[1]) if position != label_position
    ]
    if not feature_positions:
        raise ParseError("the file has no feature columns", path=path)
    columns: List[np.ndarray] = []
    for position in feature_positions:
        raw = frame.iloc[:, position].str.strip()
        values = raw.map(_to_float).to_numpy(dtype=float)
        bad = np.flatnonzero(~np.isfinite(values))
        if bad.size:
            row = int(bad[0])
            column = frame.columns[position] if header else position + 1
            raise NonNumericFeature(
                f"feature value {raw.iloc[row]!r} is not a finite number",
                path=path,
                row=row + first_line,
                column=column,
            )
        columns.append(values)
    labels = None
    label_names: Tuple[str, ...] = ()
    if label_position is not None:
        codes, uniques = pd.factorize(frame.iloc[:, label_position].str.strip(), sort=False)
        missing = np.flatnonzero(codes < 0)
        if missing.size:
            raise ParseError(
                "missing class label", path=path, row=int(missing[0]) + first_line
            )
        labels = tuple(int(code) for code in codes)
        label_names = tuple(str(unique) for unique in uniques)
    dataset = DataSet(
        name=name or path.stem,
        points=np.column_stack(columns),
        labels=labels,
        label_names=label_names,
        source=DataSource.csv_file,
    )
    logger.debug(
        "Loaded %s: %s points, %s features, %s classes",
        path,
        dataset.n,
        dataset.m,
        len(label_names) if labels is not None else "no",
    )
    return dataset


def save_csv(
    dataset: DataSet,
    path: Union[str, Path],
    header: bool = False,
    delimiter: str = ",",
) -> Path:
    """
    Write a DataSet in the CSV Profile read by `load_csv`

    Floats are written in their shortest round-trip form; labels go to the last
    column.

    Parameters
    ----------
    dataset: DataSet
    path: Union[str, Path]
    header: bool
    delimiter: str

    Returns
    -------
    Path
    """
    path = Path(path)
    frame = pd.DataFrame(
        dataset.points, columns=[f"x{index}" for index in range(dataset.m)]
    )
    if dataset.labels is not None:
        frame["label"] = [dataset.label_name(code) for code in dataset.labels]
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(
        path,
        sep=delimiter,
        header=header,
        index=False,
        float_format=lambda value: repr(float(value)),
        encoding="utf-8",
        lineterminator="\n",
    )
    logger.debug("Wrote %s points to %s", dataset.n, path)
    return path


def normalize_zscore(dataset: DataSet) -> DataSet:
    """
    Scale every Feature to Mean 0 and Population Standard Deviation 1

    Constant columns become all zeros.

    Parameters
    ----------
    dataset: DataSet

    Returns
    -------
    DataSet
    """
    if dataset.n < 2:  # noqa: PLR2004
        raise InvalidParameter("z-scores need at least two points")
    points = dataset.points
    mean = points.mean(axis=0)
    std = points.std(axis=0, ddof=0)
    centered = points - mean
    scaled = np.divide(
        centered, std, out=np.zeros_like(centered), where=std > 0
    )
    return dataset.evolve(points=scaled)
