# coding: utf-8

"""
Custom logging tools.
"""

from __future__ import annotations


__all__ = ["get_logger"]


import logging

import jpegqf.settings as settings
from jpegqf.util import maybe_colored


#: Name of the package logger, all other loggers are its children.
root_name = "jpegqf"

# colors of level names
level_colors = {
    "DEBUG": "dark_gray",
    "INFO": "cyan",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "light_red",
}


class LogFormatter(logging.Formatter):
    """
    Formatter that prefixes messages with a colored level name and the logger name.
    """

    def format(self, record: logging.LogRecord) -> str:
        level = maybe_colored(record.levelname, color=level_colors.get(record.levelname))
        msg = f"{level}: {record.name} - {record.getMessage()}"
        if record.exc_info:
            msg += "\n" + self.formatException(record.exc_info)
        return msg


def _setup_root() -> logging.Logger:
    logger = logging.getLogger(root_name)

    # configure only once
    if getattr(logger, "_jpegqf_configured", False):
        return logger

    handler = logging.StreamHandler()
    handler.setFormatter(LogFormatter())
    logger.addHandler(handler)
    logger.setLevel(settings.log_level)
    logger.propagate = False
    logger._jpegqf_configured = True  # type: ignore[attr-defined]

    return logger


def get_logger(name: str) -> logging.Logger:
    """
    Returns the logger named *name* below the package logger. *name* is typically ``__name__`` of
    the calling module, in which case it is already prefixed with the package name.
    """
    _setup_root()

    if name == root_name or name.startswith(f"{root_name}."):
        return logging.getLogger(name)

    return logging.getLogger(f"{root_name}.{name}")
