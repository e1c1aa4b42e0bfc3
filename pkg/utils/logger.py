"""
Logging for rankforge.

Everything goes to stderr so that codewords, codebooks and reports written
to stdout stay byte-identical between runs. An optional daily file under
logs/ records at DEBUG.
"""

import logging
import sys
from datetime import datetime

from core.constants import (
    APP_NAME,
    FILE_LOG_DATE_FORMAT,
    FILE_LOG_FORMAT,
    LOG_DATE_FORMAT,
    LOG_FORMAT,
)
from utils.paths import LOGS_DIR


def _is_console(handler: logging.Handler) -> bool:
    return isinstance(handler, logging.StreamHandler) and not isinstance(handler, logging.FileHandler)


def _add_file_handler(logger: logging.Logger, name: str) -> None:
    LOGS_DIR.mkdir(parents=True, exist_ok=True)
    path = LOGS_DIR / f"{name}_{datetime.now():%Y%m%d}.log"
    handler = logging.FileHandler(path, encoding="utf-8")
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FILE_LOG_FORMAT, datefmt=FILE_LOG_DATE_FORMAT))
    logger.addHandler(handler)


def setup_logger(name=APP_NAME, level="WARNING", log_to_file=False):
    """
    Configure the rankforge logger; safe to call more than once.

    Args:
        name: Logger name
        level: Console threshold (DEBUG, INFO, WARNING, ...)
        log_to_file: Also keep a daily DEBUG log under logs/

    Returns:
        logging.Logger: The configured logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    console = next((h for h in logger.handlers if _is_console(h)), None)
    if console is None:
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATE_FORMAT))
        logger.addHandler(console)
    console.setLevel(level)

    if log_to_file and not any(isinstance(h, logging.FileHandler) for h in logger.handlers):
        _add_file_handler(logger, name)
    return logger


def get_logger(name=APP_NAME):
    return logging.getLogger(name)
