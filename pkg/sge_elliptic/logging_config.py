"""Structured logging configuration using Loguru."""

import sys
from typing import Optional

from loguru import logger

from sge_elliptic.config import settings

TEXT_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "<level>{message}</level>"
)
PLAIN_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level} | {name}:{function}:{line} | {message}"


def setup_logging(level: Optional[str] = None) -> None:
    """Configure structured logging using Loguru.

    stdout carries CSV and reports, so every sink writes to stderr or a file.
    """
    logger.remove()

    log_level = (level or settings.LOG_LEVEL).upper()
    as_json = settings.LOG_FORMAT.lower() == "json"
    console_format = PLAIN_FORMAT if as_json else TEXT_FORMAT

    logger.add(
        sys.stderr,
        format=console_format,
        level=log_level,
        colorize=not as_json,
        serialize=as_json,
    )

    log_file = None
    if settings.LOG_TO_FILE:
        log_file = settings.LOG_DIR / settings.LOG_FILE
        rotation_size_mb = settings.LOG_MAX_BYTES / (1024 * 1024)
        logger.add(
            str(log_file),
            format=PLAIN_FORMAT,
            level=log_level,
            rotation=f"{rotation_size_mb:.0f} MB",
            retention=settings.LOG_BACKUP_COUNT,
            compression="zip",
            serialize=as_json,
            encoding="utf-8",
            enqueue=True,  # Thread-safe logging
        )

    logger.debug(
        "Logging configured with Loguru",
        log_level=log_level,
        log_format=settings.LOG_FORMAT,
        log_file=str(log_file) if log_file else None,
    )
