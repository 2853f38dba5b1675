"""
SVG Plots of Partitions and Decision Graphs
"""

import logging
from pathlib import Path
from typing import Optional, Sequence, Union

import matplotlib
import numpy as np
from matplotlib.figure import Figure
from matplotlib.patches import Circle as CirclePatch

from apollonius.containers import DensityProfile, RunResult
from apollonius.exceptions import DimensionError

logger = logging.getLogger(__name__)

_STYLE = {
    "svg.hashsalt": "apollonius",
    "svg.fonttype": "none",
}
_MARGIN = 0.05
_COLORMAP = "tab20"


def _save(figure: Figure, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with matplotlib.rc_context(_STYLE):
        figure.savefig(path, format="svg", metadata={"Date": None})
    logger.debug("Plot written to %s", path)
    return path


def plot_result(
    result: RunResult,
    path: Union[str, Path],
    project: bool = False,
    title: Optional[str] = None,
) -> Path:
    """
    Scatter Plot of a Partition with its Apollonius Circles

    Every group gets its own color; targets are drawn as stars, outliers as
    crosses. Results of more than two dimensions need `project`, which plots the
    first two features (spheres become their circular shadows).

    Parameters
    ----------
    result: RunResult
    path: Union[str, Path]
        Output SVG path
    project: bool
        Plot the first two features of higher dimensional results
    title: Optional[str]

    Returns
    -------
    Path
    """
    dimensions = result.dimensions
    if dimensions < 2 or (dimensions > 2 and not project):  # noqa: PLR2004
        hint = " pass --project to plot the first two features" if dimensions > 2 else ""  # noqa: PLR2004
        raise DimensionError(
            f"{result.report.dataset} has {dimensions} dimensions, plots need two;{hint}"
        )
    coordinates = np.asarray(result.coordinates, dtype=float)[:, :2]
    point_ids = list(result.point_ids)
    colormap = matplotlib.colormaps[_COLORMAP]
    figure = Figure(figsize=(7, 7))
    ax = figure.add_subplot()
    groups = np.array([-1 if group is None else group for group in result.groups])
    for group_id in sorted({group for group in result.groups if group is not None}):
        members = groups == group_id
        ax.scatter(
            coordinates[members, 0],
            coordinates[members, 1],
            s=18,
            color=colormap(group_id % colormap.N),
            label=f"group {group_id}",
            gid=f"group-{group_id}",
        )
    for circle in result.circles:
        ax.add_patch(
            CirclePatch(
                circle.center[:2],
                circle.radius,
                fill=False,
                linewidth=1.2,
                edgecolor=colormap(circle.group_id % colormap.N),
                gid=f"apollonius-circle-{circle.group_id}",
            )
        )
    positions = {point_id: index for index, point_id in enumerate(point_ids)}
    for target in result.targets:
        x, y = coordinates[positions[target]]
        ax.plot(
            [x], [y], marker="*", markersize=14, color="black", linestyle="none",
            gid=f"target-{target}",
        )
    for index in np.flatnonzero(groups == -1):
        x, y = coordinates[index]
        ax.plot(
            [x], [y], marker="x", markersize=9, color="crimson", linestyle="none",
            gid=f"outlier-{point_ids[index]}",
        )
    ax.set_aspect("equal", adjustable="datalim")
    ax.margins(_MARGIN)
    ax.autoscale_view()
    ax.set_title(title or f"{result.report.algorithm} on {result.report.dataset}")
    return _save(figure, path)


def plot_decision_graph(
    profile: DensityProfile,
    targets: Sequence[int],
    path: Union[str, Path],
    point_ids: Optional[Sequence[int]] = None,
    title: Optional[str] = None,
) -> Path:
    """
    Local Density Against Separation, Targets Highlighted

    Parameters
    ----------
    profile: DensityProfile
    targets: Sequence[int]
        Target indices
    path: Union[str, Path]
    point_ids: Optional[Sequence[int]]
        Ids used to label the targets, the indices by default
    title: Optional[str]

    Returns
    -------
    Path
    """
    rho = np.asarray(profile.rho)
    delta = np.asarray(profile.delta)
    ids = list(point_ids) if point_ids is not None else list(range(profile.n))
    figure = Figure(figsize=(7, 5))
    ax = figure.add_subplot()
    ax.scatter(rho, delta, s=14, color="steelblue", gid="points")
    for target in targets:
        ax.plot(
            [rho[target]], [delta[target]], marker="o", markersize=9, color="crimson",
            linestyle="none", gid=f"target-{ids[target]}",
        )
        ax.annotate(str(ids[target]), (rho[target], delta[target]), textcoords="offset points", xytext=(5, 5))
    ax.margins(_MARGIN)
    ax.set_xlabel("local density (rho)")
    ax.set_ylabel("separation (delta)")
    ax.set_title(title or f"decision graph, r={profile.r}")
    return _save(figure, path)
