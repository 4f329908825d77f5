# -*- coding: utf-8 -*-
"""
Logging utilities
"""
import sys
import logging
import logging.handlers
from tempfile import gettempdir

from pathlib import Path

from . import __version__

FORMATTER = logging.Formatter("%(asctime)s | %(name)s | %(levelname)s | %(message)s")

LOG_DIRECTORY = Path(gettempdir()) / f"qubitherm-{__version__}-logs"
DEFAULT_LOG_FILE = LOG_DIRECTORY / "qubitherm.log"


def setup_logging(level=logging.WARNING, log_file=None):
    """
    Attach handlers to the package logger. Records of at least ``level`` are written
    to standard error; if ``log_file`` is given, all records are also written to a file
    rotated at midnight.

    Calling this function again replaces the handlers attached previously.

    Parameters
    ----------
    level : int, optional
        Logging level of the standard error stream.
    log_file : path-like or None, optional
        Log file path.

    Returns
    -------
    logger : logging.Logger
    """
    logger = logging.getLogger("qubitherm")
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    stream_handler = logging.StreamHandler(stream=sys.stderr)
    stream_handler.setLevel(level)
    stream_handler.setFormatter(FORMATTER)
    logger.addHandler(stream_handler)

    if log_file is not None:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.handlers.TimedRotatingFileHandler(
            filename=log_file, when="midnight", backupCount=5
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(FORMATTER)
        logger.addHandler(file_handler)

    return logger
