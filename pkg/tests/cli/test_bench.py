"""
CLI Testing: `apollonius bench ...`
"""

import logging
from pathlib import Path

import pandas as pd

from tests.conftest import YAML_DIRECTORY, ApolloniusRunner, cli_status_checker

logger = logging.getLogger(__name__)


def test_bench_with_a_corrupt_dataset(cli_runner: ApolloniusRunner, output_directory: Path) -> None:
    """
    Two result rows, one error row, and still a success
    """
    test_command = f"""
    apollonius bench \
        {YAML_DIRECTORY.joinpath("partial_failure.yaml")} \
        --output suite.csv
    """
    result = cli_runner.run_command(command=test_command)
    cli_status_checker(result=result)
    frame = pd.read_csv(output_directory.joinpath("suite.csv"), keep_default_na=False)
    assert frame["dataset"].tolist() == ["fig8", "broken", "rings"]
    assert frame["error"].str.startswith("ERROR").tolist() == [False, True, False]


def test_bench_without_timing(cli_runner: ApolloniusRunner, output_directory: Path) -> None:
    """
    Untimed tables are byte-identical across runs
    """
    manifest = YAML_DIRECTORY.joinpath("fig8_suite.yaml")
    first = cli_runner.run_command(f"apollonius bench {manifest} --no-timing --output first.csv")
    cli_status_checker(result=first)
    second = cli_runner.run_command(
        f"apollonius bench {manifest} --no-timing --workers 2 --output second.csv"
    )
    cli_status_checker(result=second)
    first_text = output_directory.joinpath("first.csv").read_bytes()
    assert first_text == output_directory.joinpath("second.csv").read_bytes()
    assert b"runtime_seconds" not in first_text


def test_empty_manifest(cli_runner: ApolloniusRunner) -> None:
    """
    Nothing to run is a usage error
    """
    result = cli_runner.run_command(f"apollonius bench {YAML_DIRECTORY.joinpath('empty.yaml')}")
    assert result.exit_code == 2


def test_every_row_failed(cli_runner: ApolloniusRunner, output_directory: Path) -> None:
    """
    The table is still written, the exit status is 3
    """
    result = cli_runner.run_command(
        f"apollonius bench {YAML_DIRECTORY.joinpath('all_failed.yaml')} --output failed.csv"
    )
    assert result.exit_code == 3
    assert output_directory.joinpath("failed.csv").exists()


def test_missing_manifest(cli_runner: ApolloniusRunner, tmp_path: Path) -> None:
    """
    The manifest must exist
    """
    result = cli_runner.run_command(f"apollonius bench {tmp_path.joinpath('nothing.yaml')}")
    assert result.exit_code == 2
