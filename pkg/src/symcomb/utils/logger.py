from __future__ import annotations

import logging
import os
from typing import Dict, Optional

from rich.console import Console
from rich.logging import RichHandler

# Reports go to stdout, so log records stay on stderr.
_CONSOLE = Console(stderr=True)
_CONFIGURED: Dict[str, logging.Logger] = {}


def _resolve_level() -> int:
    raw = (os.getenv("SYMCOMB_LOG_LEVEL") or os.getenv("LOG_LEVEL") or "INFO").strip().upper()
    if raw.isdigit():
        return int(raw)
    level = logging.getLevelName(raw)
    return level if isinstance(level, int) else logging.INFO


def _apply_level(logger: logging.Logger, level: int) -> None:
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


def setup_logger(name: str = "symcomb", level: Optional[int] = None) -> logging.Logger:
    """Named logger with one stderr RichHandler; repeated calls reuse it.

    ``level`` overrides the environment, also on an existing logger.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        if level is not None:
            _apply_level(logger, level)
        return logger

    handler = RichHandler(console=_CONSOLE, rich_tracebacks=True, markup=True, show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    _apply_level(logger, _resolve_level() if level is None else level)
    _CONFIGURED[name] = logger
    return logger


def set_log_level(level: int) -> None:
    """Move every logger made by ``setup_logger`` to ``level``."""
    for logger in _CONFIGURED.values():
        _apply_level(logger, level)
