"""
Logging setup from an ini file, in the logging.config.fileConfig layout.
"""
import logging
from logging.config import fileConfig
from pathlib import Path
from typing import Optional, Union

DEFAULT_CONFIG = Path(__file__).with_name("logging.ini")


def configure_logging(
    level: Union[str, int] = "WARNING",
    config_path: Optional[Union[str, Path]] = None,
) -> logging.Logger:
    """
    Load the logging configuration and set the package log level.

    Args:
        level: Level name or number applied to the ``llt_ribbon`` logger
        config_path: Optional ini file replacing the bundled one

    Returns:
        The package logger
    """
    path = Path(config_path) if config_path else DEFAULT_CONFIG
    fileConfig(path, disable_existing_loggers=False)

    logger = logging.getLogger("llt_ribbon")
    logger.setLevel(level if isinstance(level, int) else level.upper())
    return logger
