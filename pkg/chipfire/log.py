"""
Logging setup for the command-line front end.
"""

import logging
import sys

from .exceptions import Colors

LEVEL_COLORS = {
    logging.DEBUG: Colors.INFO,
    logging.INFO: Colors.SUCCESS,
    logging.WARNING: Colors.WARNING,
    logging.ERROR: Colors.ERROR,
    logging.CRITICAL: Colors.ERROR + Colors.BOLD,
}


class ColorFormatter(logging.Formatter):
    """Prefix each record with a coloured level name."""

    def format(self, record: logging.LogRecord) -> str:
        color = LEVEL_COLORS.get(record.levelno, "")
        message = super().format(record)
        return f"{color}{record.levelname.lower()}{Colors.RESET} {message}"


def configure_logging(debug: bool = False) -> logging.Logger:
    """Install a single stderr handler on the package logger."""
    logger = logging.getLogger("chipfire")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if debug else logging.WARNING)
    logger.propagate = False
    return logger
