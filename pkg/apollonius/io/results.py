"""
Run Result Files

A result file is UTF-8 text: a versioned header line, one `key=<json>` line per
metadata field, a `---` separator and a CSV block with one
`point_id,group,x0,x1,...` line per point (`group` is `outlier` for outliers).
"""

import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import ValidationError

from apollonius.config import BenchConfig, ResultFields
from apollonius.containers import Circle, MetricsReport, RunResult
from apollonius.exceptions import ResultFormatError

logger = logging.getLogger(__name__)

_REQUIRED_KEYS = (
    ResultFields.ALGORITHM,
    ResultFields.DATASET,
    ResultFields.N_POINTS,
    ResultFields.DIMENSIONS,
    ResultFields.PARAMS,
    ResultFields.VN,
    ResultFields.RUNTIME_SECONDS,
)


def _float_text(value: float) -> str:
    return repr(float(value))


def format_result(result: RunResult) -> str:
    """
    Serialize a RunResult

    Parameters
    ----------
    result: RunResult

    Returns
    -------
    str
    """
    report = result.report
    metadata: Dict[str, Any] = {
        ResultFields.ALGORITHM: report.algorithm,
        ResultFields.DATASET: report.dataset,
        ResultFields.N_POINTS: len(result.point_ids),
        ResultFields.DIMENSIONS: result.dimensions,
        ResultFields.PARAMS: report.params,
        ResultFields.RI: report.ri,
        ResultFields.SN: report.sn,
        ResultFields.VN: report.vn,
        ResultFields.RUNTIME_SECONDS: report.runtime_seconds,
        ResultFields.TARGETS: list(result.targets),
        ResultFields.CIRCLES: [
            {"group_id": circle.group_id, "center": list(circle.center), "radius": circle.radius}
            for circle in result.circles
        ],
    }
    lines = [f"{ResultFields.HEADER_PREFIX}{BenchConfig.RESULT_FORMAT_VERSION}"]
    lines.extend(
        f"{key}={json.dumps(value, sort_keys=True)}" for key, value in metadata.items()
    )
    lines.append(ResultFields.SEPARATOR)
    frame = pd.DataFrame(
        result.coordinates,
        columns=[f"x{index}" for index in range(result.dimensions)],
    )
    frame.insert(0, ResultFields.POINT_ID, list(result.point_ids))
    frame.insert(
        1,
        ResultFields.GROUP,
        [ResultFields.OUTLIER_GROUP if group is None else str(group) for group in result.groups],
    )
    block = frame.to_csv(index=False, float_format=_float_text, lineterminator="\n")
    return "\n".join(lines) + "\n" + block


def write_result(result: RunResult, path: Union[str, Path]) -> Path:
    """
    Write a RunResult File

    Parameters
    ----------
    result: RunResult
    path: Union[str, Path]

    Returns
    -------
    Path
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_result(result), encoding="utf-8")
    logger.debug("Result written to %s", path)
    return path


def _parse_metadata(lines: List[str], path: Optional[Path]) -> Dict[str, Any]:
    metadata: Dict[str, Any] = {}
    for number, line in enumerate(lines, start=2):
        key, separator, value = line.partition("=")
        if not separator:
            raise ResultFormatError("metadata line is not key=value", path=path, row=number)
        try:
            metadata[key.strip()] = json.loads(value)
        except json.JSONDecodeError as decode_error:
            raise ResultFormatError(
                f"metadata value of {key.strip()!r} is not valid JSON", path=path, row=number
            ) from decode_error
    missing = [key for key in _REQUIRED_KEYS if key not in metadata]
    if missing:
        raise ResultFormatError(f"missing metadata keys: {', '.join(missing)}", path=path)
    return metadata


def _parse_group(value: str, row: int, path: Optional[Path]) -> Optional[int]:
    if value == ResultFields.OUTLIER_GROUP:
        return None
    try:
        return int(value)
    except ValueError as value_error:
        raise ResultFormatError(
            f"group {value!r} is neither an integer nor {ResultFields.OUTLIER_GROUP!r}",
            path=path,
            row=row,
        ) from value_error


def parse_result(text: str, path: Optional[Path] = None) -> RunResult:
    """
    Parse the Text of a RunResult File

    Parameters
    ----------
    text: str
    path: Optional[Path]
        Only used in error messages

    Returns
    -------
    RunResult
    """
    lines = text.splitlines()
    expected_header = f"{ResultFields.HEADER_PREFIX}{BenchConfig.RESULT_FORMAT_VERSION}"
    if not lines or lines[0].strip() != expected_header:
        raise ResultFormatError(f"expected the header {expected_header!r}", path=path, row=1)
    try:
        separator_index = lines.index(ResultFields.SEPARATOR)
    except ValueError as value_error:
        raise ResultFormatError("missing the --- separator", path=path) from value_error
    metadata = _parse_metadata(lines[1:separator_index], path)
    first_point_line = separator_index + 3
    frame = pd.read_csv(
        io.StringIO("\n".join(lines[separator_index + 1 :])),
        dtype=str,
        keep_default_na=False,
    )
    dimensions = int(metadata[ResultFields.DIMENSIONS])
    expected_columns = [ResultFields.POINT_ID, ResultFields.GROUP] + [
        f"x{index}" for index in range(dimensions)
    ]
    if list(frame.columns) != expected_columns:
        raise ResultFormatError(
            f"point columns {list(frame.columns)} do not match {expected_columns}",
            path=path,
            row=separator_index + 2,
        )
    if frame.shape[0] != int(metadata[ResultFields.N_POINTS]):
        raise ResultFormatError(
            f"{frame.shape[0]} point lines, expected {metadata[ResultFields.N_POINTS]}",
            path=path,
        )
    point_ids: List[int] = []
    groups: List[Optional[int]] = []
    coordinates: List[List[float]] = []
    for offset, row in enumerate(frame.itertuples(index=False)):
        line_number = first_point_line + offset
        try:
            point_ids.append(int(row[0]))
            coordinates.append([float(value) for value in row[2:]])
        except ValueError as value_error:
            raise ResultFormatError(
                "point line holds a non-numeric value", path=path, row=line_number
            ) from value_error
        groups.append(_parse_group(row[1], line_number, path))
    try:
        return RunResult(
            report=MetricsReport(
                algorithm=metadata[ResultFields.ALGORITHM],
                dataset=metadata[ResultFields.DATASET],
                ri=metadata.get(ResultFields.RI),
                sn=metadata.get(ResultFields.SN),
                vn=metadata[ResultFields.VN],
                runtime_seconds=metadata[ResultFields.RUNTIME_SECONDS],
                params=metadata[ResultFields.PARAMS],
            ),
            point_ids=point_ids,
            groups=groups,
            coordinates=coordinates,
            targets=metadata.get(ResultFields.TARGETS, []),
            circles=[Circle(**circle) for circle in metadata.get(ResultFields.CIRCLES, [])],
        )
    except (ValidationError, TypeError) as validation_error:
        raise ResultFormatError(str(validation_error), path=path) from validation_error


def read_result(path: Union[str, Path]) -> RunResult:
    """
    Read a RunResult File

    Parameters
    ----------
    path: Union[str, Path]

    Returns
    -------
    RunResult
    """
    path = Path(path)
    if not path.is_file():
        raise ResultFormatError("the result file does not exist", path=path)
    return parse_result(path.read_text(encoding="utf-8"), path=path)
