"""Logging for the toolkit: console output plus per-service log files.

Console output goes through the root logger (see ``main.setup_logging``).
Long-running services also write to their own file, named in the run
configuration's ``log_files`` map, for example::

    log_files:
      core.services.corpus_service: "corpus.log"
      core.services.verification_service: "verify.log"
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from core.models.config import LogLevel, RunConfig

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Handlers attached by the last call, by logger name
_service_handlers: Dict[str, logging.Handler] = {}


def _level_of(level: Union[LogLevel, str]) -> int:
    name = level.value if isinstance(level, LogLevel) else str(level)
    try:
        return getattr(logging, name.upper())
    except AttributeError:
        return logging.INFO


def detach_service_logs() -> None:
    """Remove and close every handler attached by ``attach_service_logs``."""
    for name, handler in _service_handlers.items():
        logging.getLogger(name).removeHandler(handler)
        handler.close()
    _service_handlers.clear()


def attach_service_logs(
    log_files: Dict[str, str], log_dir: Union[str, Path], level: Union[LogLevel, str] = LogLevel.INFO
) -> List[Path]:
    """Send each named logger to its own file under ``log_dir``.

    Replaces the handlers of an earlier call. Records still propagate to
    the console handlers.

    Returns:
        The log file paths, in logger-name order
    """
    detach_service_logs()
    directory = Path(log_dir)
    paths = []
    for name, file_name in sorted(log_files.items()):
        path = directory / file_name
        path.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(path, encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler.setLevel(_level_of(level))
        logging.getLogger(name).addHandler(handler)
        _service_handlers[name] = handler
        paths.append(path)
    return paths


def configure_service_logs(config: RunConfig, log_dir: Optional[str] = None) -> List[Path]:
    """Attach the service log files named in ``config``.

    Files go to ``config.log_dir``, or ``<output_dir>/logs`` when unset.
    """
    directory = log_dir or config.log_dir or str(Path(config.output_dir) / "logs")
    return attach_service_logs(config.log_files, directory, config.log_level)
