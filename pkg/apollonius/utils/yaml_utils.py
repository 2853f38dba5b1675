"""
YAML Utilities for Apollonius
"""

import logging
import os
from pathlib import Path
from re import compile
from typing import Any, Union

import yaml
from pydantic import ValidationError
from yaml import SafeLoader, load

from apollonius.containers.bench_model import BenchManifest
from apollonius.exceptions import InvalidParameter, ParseError

logger = logging.getLogger(__name__)

_ENV_PATTERN = compile(r".*?\${(\w+)}.*?")


class _EnvVarLoader(SafeLoader):
    """
    SafeLoader that expands ${VAR_NAME} references
    """


def _env_var_constructor(loader: yaml.Loader, node: Any) -> Any:
    """
    Extracts the environment variable from the node's value

    Parameters
    ----------
    loader: yaml.Loader
    node: Any
        The current node in the yaml

    Returns
    -------
    Any
        the parsed string that contains the value of the environment variable
    """
    value = loader.construct_scalar(node=node)
    match = _ENV_PATTERN.findall(string=value)
    if match:
        full_value = value
        for item in match:
            full_value = full_value.replace(
                "${{{key}}}".format(key=item), os.getenv(key=item, default=item)
            )
        return full_value
    return value


# every string scalar, quoted or plain, goes through the expansion
_EnvVarLoader.add_constructor(tag="tag:yaml.org,2002:str", constructor=_env_var_constructor)


def read_yaml(path: Union[str, Path]) -> Any:
    """
    Read a YAML File

    Load a yaml file and resolve any environment variables. The environment
    variables must be in this format to be parsed: ${VAR_NAME}.

    Parameters
    ----------
    path: Union[str, Path]
        File Path of YAML Object to Read

    Examples
    --------
    datasets:
      - name: iris
        path: ${APOLLONIUS_IRIS_CSV}
    """
    path = os.path.abspath(path)
    try:
        with open(path, encoding="utf-8") as yaml_data:
            return load(stream=yaml_data, Loader=_EnvVarLoader)
    except FileNotFoundError as missing:
        raise ParseError("the YAML file does not exist", path=path) from missing
    except yaml.YAMLError as yaml_error:
        mark = getattr(yaml_error, "problem_mark", None)
        raise ParseError(
            f"invalid YAML: {getattr(yaml_error, 'problem', yaml_error)}",
            path=path,
            row=None if mark is None else mark.line + 1,
            column=None if mark is None else mark.column + 1,
        ) from yaml_error


def yaml_file_to_manifest(file_path: Union[str, Path]) -> BenchManifest:
    """
    Convert a YAML File into a BenchManifest

    Parameters
    ----------
    file_path: Union[str, Path]
        File Path to YAML

    Returns
    -------
    BenchManifest
    """
    content = read_yaml(path=file_path)
    logger.info(f"YAML File Parsed: {Path(file_path).name}")
    if content is None:
        content = {}
    if not isinstance(content, dict):
        raise InvalidParameter(f"{file_path} does not hold a mapping of datasets and algorithms")
    try:
        return BenchManifest(**content)
    except ValidationError as validation_error:
        raise InvalidParameter(
            f"invalid bench manifest {file_path}: {validation_error}"
        ) from validation_error
