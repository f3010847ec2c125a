#!/usr/bin/env python3

"""Unit tests for the loguru setup and key-step logging."""

from __future__ import annotations

import pytest

from nullcert.log.logger import configure_logging, get_logger, log_step, run_step


@pytest.fixture
def debug_logging():
    configure_logging("DEBUG")
    yield
    configure_logging("WARNING")


def test_log_step_record(capsys, debug_logging) -> None:
    """Key-step records carry task id, target, result and duration."""
    log_step("abc123", "indicator_factors", "ok", 12)
    err = capsys.readouterr().err
    assert "task_id=abc123 target=indicator_factors result=ok duration_ms=12" in err
    assert "| step |" in err


def test_run_step_returns_result(capsys, debug_logging) -> None:
    result = run_step("t1 sum", lambda left, right: left + right, 1, 2)

    assert result == 3
    err = capsys.readouterr().err
    assert "[t1] -> sum" in err
    assert "task_id=t1 target=sum result=ok" in err


def test_run_step_failure_reraises(capsys, debug_logging) -> None:
    def _raise_error() -> None:
        raise ValueError("boom")

    with pytest.raises(ValueError, match="boom"):
        run_step("t2 explode", _raise_error)
    err = capsys.readouterr().err
    assert "[t2] !! explode failed" in err
    assert "result=exception" in err


def test_run_step_generates_task_id(capsys, debug_logging) -> None:
    run_step("solo", lambda: None)
    assert "target=solo result=ok" in capsys.readouterr().err


def test_logs_never_reach_stdout(capsys, debug_logging) -> None:
    get_logger("cli").warning("containment not checked")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "| cli | containment not checked" in captured.err


def test_level_filters_records(capsys) -> None:
    configure_logging("WARNING")
    get_logger("oracle").info("hidden")
    get_logger("oracle").warning("shown")
    err = capsys.readouterr().err
    assert "hidden" not in err
    assert "shown" in err


def test_cli_logger_levels(capsys) -> None:
    from nullcert.cli.common.utils import Logger

    Logger().debug("hidden detail")
    Logger(verbose=True).debug("shown detail")
    Logger().warning("careful")
    Logger().error("broken")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hidden detail" not in captured.err
    assert "shown detail" in captured.err
    assert "careful" in captured.err
    assert "error: broken" in captured.err
    assert not hasattr(Logger(), "success")
