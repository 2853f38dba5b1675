"""
CLI Testing: `apollonius plot ...` and `apollonius decision-graph ...`
"""

import logging
from pathlib import Path

import numpy as np

from apollonius.algorithms import NcarAlgorithm
from apollonius.containers import DataSet
from apollonius.io import write_result
from tests.conftest import ApolloniusRunner, cli_status_checker

logger = logging.getLogger(__name__)


def test_plot_a_result(cli_runner: ApolloniusRunner, output_directory: Path) -> None:
    """
    run, then plot its result file
    """
    run = cli_runner.run_command(
        "apollonius run --gen fig8 --p 0.2 --targets 3 --repeats 1 --output fig8.result"
    )
    cli_status_checker(result=run)
    result = cli_runner.run_command(
        f"apollonius plot {output_directory.joinpath('fig8.result')} fig8.svg"
    )
    cli_status_checker(result=result)
    svg = output_directory.joinpath("fig8.svg").read_text(encoding="utf-8")
    assert svg.count('id="apollonius-circle-') == 3
    assert svg.count('id="outlier-') == 1


def test_plot_needs_project_for_higher_dimensions(
    cli_runner: ApolloniusRunner, rng: np.random.Generator, tmp_path: Path, output_directory: Path
) -> None:
    """
    Three features fail without --project and plot with it
    """
    points = np.vstack([rng.normal(0, 0.3, (15, 3)), rng.normal(5, 0.3, (15, 3))])
    run_result = NcarAlgorithm(target_count=2).run(DataSet(name="3d", points=points), repeats=1)
    path = write_result(run_result, tmp_path.joinpath("3d.result"))
    assert cli_runner.run_command(f"apollonius plot {path} 3d.svg").exit_code == 3
    result = cli_runner.run_command(f"apollonius plot {path} 3d.svg --project")
    cli_status_checker(result=result)
    assert output_directory.joinpath("3d.svg").exists()


def test_plot_a_malformed_result(cli_runner: ApolloniusRunner, tmp_path: Path) -> None:
    """
    Broken result files exit with status 3
    """
    path = tmp_path.joinpath("broken.result")
    path.write_text("not a result\n", encoding="utf-8")
    assert cli_runner.run_command(f"apollonius plot {path} broken.svg").exit_code == 3


def test_decision_graph(cli_runner: ApolloniusRunner, output_directory: Path) -> None:
    """
    Targets are highlighted by point id
    """
    test_command = """
    apollonius decision-graph \
        --gen fig8 \
        --p 0.2 \
        --targets 3 \
        graph.svg
    """
    result = cli_runner.run_command(command=test_command)
    cli_status_checker(result=result)
    svg = output_directory.joinpath("graph.svg").read_text(encoding="utf-8")
    for target in (1, 5, 8):
        assert f'id="target-{target}"' in svg
