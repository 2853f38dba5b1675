"""
Logging Configuration for the Command Line and the Pipelines
"""

import logging
from os import getenv
from typing import Optional, Tuple

from rich.logging import RichHandler

LOG_HANDLER = getenv("APOLLONIUS_LOG_HANDLER", "rich").lower()
# plotting and font libraries that flood DEBUG output while saving SVG files
QUIET_LOGGERS: Tuple[str, ...] = ("matplotlib", "PIL", "fontTools")
PYTHON_LOG_FORMAT = "%(asctime)s [%(levelname)8s] %(name)s: %(message)s"


def resolve_log_level(log_level: Optional[int] = None) -> int:
    """
    Resolve the Effective Log Level

    An explicit level wins, then `APOLLONIUS_LOG_LEVEL`, then `LOG_LEVEL`, then INFO.
    Unknown level names fall back to INFO.

    Parameters
    ----------
    log_level: Optional[int]

    Returns
    -------
    int
    """
    if log_level is not None:
        return log_level
    name = getenv("APOLLONIUS_LOG_LEVEL") or getenv("LOG_LEVEL") or "INFO"
    level = logging.getLevelName(name.strip().upper())
    return level if isinstance(level, int) else logging.INFO


def get_log_handler(log_level: Optional[int] = None) -> Tuple[logging.Handler, int]:
    """
    Determine which logging handler should be used

    A plain stream handler is used under pytest or with
    `APOLLONIUS_LOG_HANDLER=python`; it names the emitting module, so the
    DEBUG lines of the pipeline stages can be told apart.

    Parameters
    ----------
    log_level: Optional[int]

    Returns
    -------
    Tuple[logging.Handler, int]
    """
    level = resolve_log_level(log_level)
    plain = getenv("PYTEST_CURRENT_TEST") is not None or LOG_HANDLER == "python"
    handler: logging.Handler
    if plain:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(PYTHON_LOG_FORMAT))
    else:
        handler = RichHandler(
            level=level,
            rich_tracebacks=True,
            omit_repeated_times=False,
            show_path=False,
        )
        handler.setFormatter(logging.Formatter(datefmt="[%Y-%m-%d %H:%M:%S]", fmt="%(message)s"))
    handler.setLevel(level)
    return handler, level


def set_up_logging(log_level: Optional[int] = None) -> None:
    """
    Set Up a Root Logger

    The loggers in QUIET_LOGGERS stay at WARNING whatever the root level.

    Parameters
    ----------
    log_level: Optional[int]
        Explicit level, otherwise resolved from the environment
    """
    log_handler, level = get_log_handler(log_level=log_level)
    logging.root.handlers = [log_handler]
    logging.root.setLevel(level)
    for name in QUIET_LOGGERS:
        logging.getLogger(name).setLevel(logging.WARNING)
