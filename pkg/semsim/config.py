"""
Environment + logging setup.

- SEMSIM_LOG_LEVEL: default log level (DEBUG, INFO, WARNING, ...). Default WARNING.
- SEMSIM_DATA_DIR: optional directory searched for bare fixture names before
  the bundled package data.
"""
from __future__ import annotations

import logging
import os
import sys
from pathlib import Path
from typing import Optional, Union

LOG_FORMAT = "[%(asctime)s] %(levelname)s - %(message)s"
DEFAULT_LOG_LEVEL = "WARNING"

PACKAGE_DIR = Path(__file__).resolve().parent
BUNDLED_DATA_DIR = PACKAGE_DIR / "data"

_HANDLER_TAG = "_semsim_handler"


def env_log_level() -> str:
    return (os.getenv("SEMSIM_LOG_LEVEL", "") or DEFAULT_LOG_LEVEL).strip().upper()


def env_data_dir() -> Optional[Path]:
    raw = os.getenv("SEMSIM_DATA_DIR", "").strip()
    return Path(raw) if raw else None


def configure_logging(level: Union[str, int, None] = None) -> logging.Logger:
    """Install (once) a stderr handler on the package logger and set its level."""
    logger = logging.getLogger("semsim")
    if level is None:
        level = env_log_level()
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING
    logger.setLevel(level)

    if not any(getattr(h, _HANDLER_TAG, False) for h in logger.handlers):
        ch = logging.StreamHandler(sys.stderr)
        ch.setFormatter(logging.Formatter(LOG_FORMAT))
        setattr(ch, _HANDLER_TAG, True)
        logger.addHandler(ch)
    return logger
