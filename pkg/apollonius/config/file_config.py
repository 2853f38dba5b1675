"""
Project Configuration for File Paths
"""

from os import getenv
from os.path import abspath, join
from pathlib import Path

from dotenv import load_dotenv


class FileConfig:
    """
    File Path Storage Class
    """

    HOME_PATH = abspath(Path.home())
    DOT_APOLLONIUS_FILE = join(HOME_PATH, ".apollonius")
    _file_config_file = Path(abspath(__file__))
    _config_dir = _file_config_file.parent

    APOLLONIUS_DIRECTORY = _config_dir.parent
    ROOT_DIRECTORY = APOLLONIUS_DIRECTORY.parent

    OUTPUT_DIRECTORY_ENV_VAR: str = "APOLLONIUS_OUTPUT_DIR"

    @classmethod
    def output_directory(cls) -> Path:
        """
        Default Directory for Result Files, Tables and Plots

        Resolved at call time so that `APOLLONIUS_OUTPUT_DIR` (from the environment
        or the `~/.apollonius` dotenv file) can change between invocations.

        Returns
        -------
        Path
        """
        load_dotenv(cls.DOT_APOLLONIUS_FILE, override=False)
        directory = getenv(cls.OUTPUT_DIRECTORY_ENV_VAR, None)
        if directory is None or directory == "":
            return Path.cwd()
        return Path(directory).expanduser().resolve()

    @classmethod
    def resolve_output(cls, path: str) -> Path:
        """
        Place relative output paths inside the output directory

        Parameters
        ----------
        path: str

        Returns
        -------
        Path
        """
        output_path = Path(path).expanduser()
        if not output_path.is_absolute():
            output_path = cls.output_directory().joinpath(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        return output_path
