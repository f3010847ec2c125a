#!/usr/bin/env python3

"""Loguru configuration and key-step logging for nullcert."""

from __future__ import annotations

import os
import sys
import time
import uuid
from typing import Any, Callable, Optional, TypeVar

from loguru import logger


_T = TypeVar("_T")

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan> | <level>{message}</level>"
)
DEFAULT_LEVEL = "WARNING"

_handler_id: Optional[int] = None


def configure_logging(level: Optional[str] = None) -> None:
    """Install the single stderr sink.

    stdout is reserved for command output, so logs always go to stderr.

    Args:
        level: Log level; falls back to ``NULLCERT_LOG_LEVEL`` then WARNING.
    """
    global _handler_id
    resolved = (level or os.getenv("NULLCERT_LOG_LEVEL") or DEFAULT_LEVEL).upper()
    if _handler_id is not None:
        try:
            logger.remove(_handler_id)
        except ValueError:
            pass
    else:
        logger.remove()
    # looked up per message: follows a redirected stderr
    _handler_id = logger.add(lambda message: sys.stderr.write(message), colorize=False, level=resolved, format=LOG_FORMAT)


logger.configure(extra={"component": "nullcert"})
configure_logging()


def get_logger(component: str) -> Any:
    """Logger bound to a component name."""
    return logger.bind(component=component)


def log_step(task_id: str, target: str, result: str, duration_ms: int) -> None:
    """Write one key-step record.

    Args:
        task_id: Correlation id.
        target: Step name.
        result: ``ok``, ``fail`` or ``exception``.
        duration_ms: Duration in milliseconds.
    """
    logger.bind(component="step").info(
        f"task_id={task_id} target={target} result={result} duration_ms={duration_ms}"
    )


def run_step(name: str, fn: Callable[..., _T], *args: Any, **kwargs: Any) -> _T:
    """Run ``fn`` and log its duration; failures are logged and re-raised.

    Args:
        name: Step name, optionally prefixed by a task id (``"<id> <name>"``).
        fn: Callable to run.
        *args: Positional arguments for ``fn``.
        **kwargs: Keyword arguments for ``fn``.

    Returns:
        _T: Whatever ``fn`` returns.
    """
    task_id, _, target = name.partition(" ")
    if not target:
        task_id, target = uuid.uuid4().hex[:8], name
    step_log = logger.bind(component="step")
    start = time.perf_counter()
    step_log.debug(f"[{task_id}] -> {target}")
    try:
        result = fn(*args, **kwargs)
    except Exception:
        cost = time.perf_counter() - start
        step_log.debug(f"[{task_id}] !! {target} failed cost={cost:.3f}s")
        log_step(task_id, target, "exception", int(cost * 1000))
        raise
    log_step(task_id, target, "ok", int((time.perf_counter() - start) * 1000))
    return result
