"""
SVG Plots
"""

from pathlib import Path

import numpy as np
import pytest

from apollonius.algorithms import NcarAlgorithm
from apollonius.containers import DataSet, NcarParams
from apollonius.data import FIG8_PARAMS
from apollonius.exceptions import DimensionError
from apollonius.io import plot_decision_graph, plot_result
from apollonius.ncar import run_ncar_detailed


def test_fig8_plot_elements(fig8: DataSet, tmp_path: Path) -> None:
    """
    Three circles, three targets and one outlier marker
    """
    result = NcarAlgorithm(p=0.2, target_count=3).run(fig8, repeats=1)
    svg = plot_result(result, tmp_path.joinpath("fig8.svg")).read_text(encoding="utf-8")
    assert svg.count('id="apollonius-circle-') == 3
    assert svg.count('id="outlier-') == 1
    assert 'id="outlier-10"' in svg
    for target in (1, 5, 8):
        assert f'id="target-{target}"' in svg
    assert svg.count('id="group-') == 3


def test_plot_without_outliers(two_blobs: DataSet, tmp_path: Path) -> None:
    """
    No outlier markers when every point is grouped
    """
    result = NcarAlgorithm(target_count=2).run(two_blobs, repeats=1)
    svg = plot_result(result, tmp_path.joinpath("blobs.svg")).read_text(encoding="utf-8")
    assert 'id="outlier-' not in svg
    assert svg.count('id="apollonius-circle-') == 2


def test_plots_are_reproducible(fig8: DataSet, tmp_path: Path) -> None:
    """
    The same result always renders to the same bytes
    """
    result = NcarAlgorithm(p=0.2, target_count=3).run(fig8, repeats=1)
    first = plot_result(result, tmp_path.joinpath("first.svg")).read_bytes()
    second = plot_result(result, tmp_path.joinpath("second.svg")).read_bytes()
    assert first == second


def test_high_dimensional_results_need_projection(rng: np.random.Generator, tmp_path: Path) -> None:
    """
    Four features only plot when projected
    """
    points = np.vstack([rng.normal(0, 0.3, (20, 4)), rng.normal(6, 0.3, (20, 4))])
    result = NcarAlgorithm(target_count=2).run(DataSet(name="4d", points=points), repeats=1)
    with pytest.raises(DimensionError, match="--project"):
        plot_result(result, tmp_path.joinpath("4d.svg"))
    path = plot_result(result, tmp_path.joinpath("4d.svg"), project=True)
    assert path.read_text(encoding="utf-8").count('id="apollonius-circle-') == 2


def test_one_dimensional_results_cannot_be_plotted(tmp_path: Path) -> None:
    """
    A line has no second axis
    """
    dataset = DataSet(name="line", points=[[0.0], [0.1], [5.0], [5.1]])
    result = NcarAlgorithm(p=0.3, target_count=2).run(dataset, repeats=1)
    with pytest.raises(DimensionError):
        plot_result(result, tmp_path.joinpath("line.svg"))


def test_decision_graph_marks_targets(fig8: DataSet, tmp_path: Path) -> None:
    """
    Targets are labelled by point id
    """
    detailed = run_ncar_detailed(fig8, FIG8_PARAMS)
    path = plot_decision_graph(
        detailed.profile, detailed.targets, tmp_path.joinpath("decision.svg"), fig8.point_ids
    )
    svg = path.read_text(encoding="utf-8")
    assert 'id="points"' in svg
    assert {target for target in (1, 5, 8) if f'id="target-{target}"' in svg} == {1, 5, 8}
    assert svg.count('id="target-') == 3


def test_decision_graph_defaults_to_indices(two_blobs: DataSet, tmp_path: Path) -> None:
    """
    Without ids the indices label the targets
    """
    detailed = run_ncar_detailed(two_blobs, NcarParams(target_count=2))
    svg = plot_decision_graph(detailed.profile, detailed.targets, tmp_path.joinpath("graph.svg")).read_text(
        encoding="utf-8"
    )
    for target in detailed.targets:
        assert f'id="target-{target}"' in svg
