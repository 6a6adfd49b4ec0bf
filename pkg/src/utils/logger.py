import logging
import os
from typing import Dict

from rich.console import Console
from rich.logging import RichHandler

# stdout is reserved for iteration lines and summaries
_console = Console(stderr=True)
_loggers: Dict[str, logging.Logger] = {}


class CenteredFormatter(logging.Formatter):
    longest_name_length = 14  # Initial default width

    def __init__(self, fmt=None, datefmt=None, style="%", initial_width=14):
        super().__init__(fmt, datefmt, style)
        CenteredFormatter.longest_name_length = initial_width

    def format(self, record):
        CenteredFormatter.longest_name_length = max(
            CenteredFormatter.longest_name_length, len(record.name)
        )

        dynamic_width = CenteredFormatter.longest_name_length + 2
        record.name = f"{record.name.center(dynamic_width - 2)}"
        return super().format(record)


def _default_level() -> int:
    return logging.DEBUG if os.getenv("DEBUG") else logging.INFO


def get_logger(name=None) -> logging.Logger:
    """
    Creates and returns a logger configured with RichHandler, writing to stderr.
    """
    if name is None:
        name = "qaoa-maxcut"
    logger = logging.getLogger(name)

    if not logger.handlers:
        log_level = _default_level()
        logger.setLevel(log_level)

        formatter = CenteredFormatter("[%(name)s]  %(message)s")
        console_handler = RichHandler(
            console=_console,
            show_time=True,
            show_level=True,
            show_path=False,
            rich_tracebacks=True,
            log_time_format="[%X]",
        )
        console_handler.setFormatter(formatter)
        console_handler.setLevel(log_level)
        logger.addHandler(console_handler)

        logger.propagate = False
        logger.debug(f"Logger for '{name}' initialized with RichHandler.")

    _loggers[name] = logger
    return logger


def set_log_level(level: int) -> None:
    """Apply a level to every logger handed out by get_logger (CLI --verbose)."""
    for logger in _loggers.values():
        logger.setLevel(level)
        for handler in logger.handlers:
            handler.setLevel(level)
