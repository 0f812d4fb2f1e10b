"""Logging configuration for the hereditary Nordhaus-Gaddum toolkit."""
import logging
from pathlib import Path
from typing import Optional

LOGGER_NAME = "hng"
LOG_FILE = "hng.log"

_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def _file_handlers(logger: logging.Logger):
    return [h for h in logger.handlers if isinstance(h, logging.FileHandler)]


def setup_logging(log_dir: Optional[Path] = None, level: int = logging.INFO) -> logging.Logger:
    """Configure the shared ``hng`` logger.

    Repeated calls only update the level and, when ``log_dir`` moved (a new
    cache directory), point the file handler at the new ``hng.log``.

    Args:
        log_dir: Directory for ``hng.log``. If None, logs go to stderr only.
        level: Logging level (default: INFO).
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    formatter = logging.Formatter(_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

    if not any(type(h) is logging.StreamHandler for h in logger.handlers):
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    if log_dir:
        target = (Path(log_dir) / LOG_FILE).resolve()
        current = _file_handlers(logger)
        if not any(Path(h.baseFilename) == target for h in current):
            for h in current:
                logger.removeHandler(h)
                h.close()
            target.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(target, encoding="utf-8")
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    return logger
