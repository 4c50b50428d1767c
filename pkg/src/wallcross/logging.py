"""Logging for wallcross warnings and progress, rendered by rich on stderr."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

logger = logging.getLogger("wallcross")


def verbosity_level(verbose: int) -> int:
    """Map a repeated -v count to a handler threshold."""
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def setup_logging(level: int = logging.DEBUG, handler_level: int = logging.WARNING) -> None:
    """Configure the wallcross logger.

    The logger passes everything at `level`; the stderr handler filters at
    `handler_level`, so -v/-vv only touches the handler.
    """
    logger.setLevel(level)
    logger.handlers.clear()

    # results go to stdout
    handler = RichHandler(
        console=Console(stderr=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    handler.setLevel(handler_level)
    logger.addHandler(handler)


def set_console_level(handler_level: int) -> None:
    for handler in logger.handlers:
        handler.setLevel(handler_level)


def get_logger() -> logging.Logger:
    return logger
