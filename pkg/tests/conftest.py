"""
Pytest Fixtures Shared Across all Unit Tests
"""

import logging
from pathlib import Path
from textwrap import dedent
from typing import Callable

import numpy as np
import pytest
from click.testing import CliRunner, Result

from apollonius.cli import apollonius_command_line
from apollonius.config.logging_config import QUIET_LOGGERS
from apollonius.containers import BlobSpec, DataSet
from apollonius.data import fig8_fixture, generate_blobs_with_outliers

logger = logging.getLogger(__name__)
for quiet_logger in QUIET_LOGGERS:
    logging.getLogger(quiet_logger).setLevel(logging.WARNING)

TESTS_DIRECTORY = Path(__file__).parent
YAML_DIRECTORY = TESTS_DIRECTORY.joinpath("yaml")


class ApolloniusRunner(CliRunner):
    """
    Custom CLI Runner for Apollonius
    """

    def run_command(self, command: str) -> Result:
        """
        Run an Apollonius Command and Return the Result

        Parameters
        ----------
        command

        Returns
        -------
        Result
        """
        parsed_command = self.parse_command(command=command)
        logger.debug("Apollonius CLI: %s", parsed_command)
        result = self.invoke(cli=apollonius_command_line, args=parsed_command)
        return result

    @classmethod
    def parse_command(cls, command: str) -> str:
        """
        Parse a multi-line Apollonius CLI Command to a Parseable Str

        Parameters
        ----------
        command: str

        Returns
        -------
        str
        """
        command_parsed = dedent(command).strip()
        for r in (("\\", ""), ("\n", ""), ("\t", " "), ("  ", " "), ("apollonius ", "")):
            command_parsed = command_parsed.replace(*r)
        return command_parsed


@pytest.fixture
def cli_runner() -> ApolloniusRunner:
    """
    Fixture for invoking command-line interfaces.
    """
    return ApolloniusRunner()


def cli_status_checker(result: Result, exit_code_zero: bool = True) -> None:
    """
    Handle Exceptions from the CLI

    Parameters
    ----------
    result : Result
        CliRunner Invoke Result
    exit_code_zero: bool
        Whether the exit code should be `0` - defaults to True
    """
    try:
        assert (result.exit_code == 0) == exit_code_zero
    except AssertionError as e:
        logger.exception(result.exception, exc_info=result.exc_info)
        raise AssertionError(result.output) from e


@pytest.fixture(autouse=True)
def output_directory(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Path:
    """
    Send every relative output path into the test's temporary directory
    """
    directory = tmp_path.joinpath("output")
    directory.mkdir()
    monkeypatch.setenv("APOLLONIUS_OUTPUT_DIR", str(directory))
    return directory


@pytest.fixture
def rng() -> np.random.Generator:
    """
    Seeded PCG64 Generator
    """
    return np.random.Generator(np.random.PCG64(20240607))


@pytest.fixture
def fig8() -> DataSet:
    """
    The Ten Point Worked Example
    """
    return fig8_fixture()


@pytest.fixture
def two_blobs() -> DataSet:
    """
    Two Gaussian Blobs, 40 Standard Deviations Apart
    """
    return generate_blobs_with_outliers(
        [
            BlobSpec(center=(0.0, 0.0), sigma=0.5, count=30),
            BlobSpec(center=(20.0, 0.0), sigma=0.5, count=30),
        ],
        seed=7,
    )


@pytest.fixture
def write_csv(tmp_path: Path) -> Callable[[str, str], Path]:
    """
    Write CSV text into the temporary directory
    """

    def _write(text: str, name: str = "points.csv") -> Path:
        path = tmp_path.joinpath(name)
        path.write_text(dedent(text).lstrip(), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def duplicate_peak() -> DataSet:
    """
    Two Small Clusters, the Densest Point Stored Twice
    """
    return DataSet(
        name="duplicate-peak",
        points=[
            [0.0, 0.0],
            [0.0, 0.0],
            [0.3, 0.0],
            [-0.3, 0.0],
            [0.0, 0.3],
            [5.0, 0.0],
            [5.3, 0.0],
            [4.7, 0.0],
            [5.0, 0.3],
        ],
        labels=[0, 0, 0, 0, 0, 1, 1, 1, 1],
    )
