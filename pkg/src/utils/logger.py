"""
Logging Utility
Provides centralized logging configuration for the application
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Optional

import colorlog

FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
CONSOLE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_COLORS = {
    'DEBUG': 'cyan',
    'INFO': 'green',
    'WARNING': 'yellow',
    'ERROR': 'red',
    'CRITICAL': 'red,bg_white',
}


def setup_logging(
    level: str = "INFO",
    log_file: Optional[str] = None,
    max_file_size: str = "10MB",
    backup_count: int = 5,
    color: bool = True
) -> logging.Logger:
    """
    Set up logging for the application.

    The console handler writes to stderr; stdout carries command output only.
    With a log file, errors are also copied to '<stem>_errors<suffix>' next to it.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file path; enables rotating file logs
        max_file_size: Maximum size per log file
        backup_count: Number of backup log files to keep
        color: Use colored console output

    Returns:
        Configured root logger
    """
    numeric_level = getattr(logging, str(level).upper(), logging.INFO)

    if color:
        console_formatter = colorlog.ColoredFormatter(
            f'%(log_color)s{CONSOLE_FORMAT}%(reset)s', datefmt='%H:%M:%S', log_colors=LOG_COLORS
        )
    else:
        console_formatter = logging.Formatter(CONSOLE_FORMAT, datefmt='%H:%M:%S')

    logger = logging.getLogger()
    logger.setLevel(numeric_level)
    logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(console_formatter)
    console_handler.setLevel(numeric_level)
    logger.addHandler(console_handler)

    if log_file is not None:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        error_path = log_path.with_name(f"{log_path.stem}_errors{log_path.suffix or '.log'}")

        max_bytes = _parse_file_size(max_file_size)
        logger.addHandler(_rotating_handler(log_path, numeric_level, max_bytes, backup_count))
        logger.addHandler(_rotating_handler(error_path, logging.ERROR, max_bytes, backup_count))

    _configure_third_party_loggers()

    logger.debug(f"Logging initialized - Level: {level}")
    if log_file is not None:
        logger.debug(f"Log file: {log_file}")

    return logger


def _rotating_handler(path: Path, level: int, max_bytes: int, backup_count: int) -> logging.Handler:
    handler = logging.handlers.RotatingFileHandler(
        path,
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding='utf-8'
    )
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
    return handler


def _parse_file_size(size_str: str) -> int:
    """
    Parse file size string to bytes.

    Args:
        size_str: Size string like "10MB", "1GB", or a plain byte count

    Returns:
        Size in bytes
    """
    size_str = str(size_str).upper()
    units = {'KB': 1024, 'MB': 1024 ** 2, 'GB': 1024 ** 3}

    for suffix, factor in units.items():
        if size_str.endswith(suffix):
            return int(size_str[:-2]) * factor
    return int(size_str)


def _configure_third_party_loggers():
    """Keep library loggers below our own verbosity."""
    logging.getLogger('concurrent.futures').setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance for a specific module.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
