#!/usr/bin/env python3

"""Command dispatch shared by every click command.

Each invocation is described by a :class:`CliConfig`; :func:`run` maps it to
one library operation and returns a :class:`ReturnResponse` whose ``code``
is the process exit status.
"""

from __future__ import annotations

import dataclasses
from typing import Any, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..certgen import PolySystem, certify_t1, verify
from ..errors import (
    ConfigError,
    ContainmentError,
    EnumerationCapError,
    FieldError,
    InconsistencyError,
    InvalidSystemError,
    NotApplicableError,
    ParseError,
    PolynomialError,
)
from ..finitesatz import certify_t2
from ..log.logger import get_logger
from ..lowerbounds import base_p_digits, demo_degree, demo_field_size, demo_interp, lucas_nonzero
from ..mpoly import normal_form
from ..oracle import min_degree
from ..schemas.codes import ExitCode
from ..schemas.response import ReturnResponse
from ..schemas.settings import Settings
from ..sysio.document import parse_certificate, parse_system, serialize, serialize_system, to_record
from ..sysio.render import format_point, format_poly
from .common.utils import read_input
from .formatters.output import OutputFormatter


_LOG = get_logger("cli")

Command = Literal[
    "certify",
    "verify",
    "reduce",
    "mindeg",
    "lucas",
    "demo-field-size",
    "demo-degree",
    "demo-interp",
]

_ARITY = {"lucas": 3, "demo-field-size": 1, "demo-degree": 3, "demo-interp": 1}
_DOCUMENT_COMMANDS = ("certify", "verify", "reduce", "mindeg")


class CliConfig(BaseModel):
    """One validated CLI invocation."""

    command: Command
    input_path: Optional[str] = Field(default=None, description="system document, '-' for stdin")
    cert_path: Optional[str] = Field(default=None, description="certificate document (verify)")
    output_path: Optional[str] = None
    output_format: Literal["text", "record", "json", "toml", "yaml"] = "text"
    args: Tuple[int, ...] = ()
    reduced: bool = False
    dmax: Optional[int] = Field(default=None, ge=0)
    cap: Optional[int] = Field(default=None, ge=1)
    check: bool = True
    oracle: bool = False
    mode: Optional[Literal["t1", "t2"]] = None

    @model_validator(mode="after")
    def _check_combination(self) -> "CliConfig":
        cmd = self.command
        if cmd in _DOCUMENT_COMMANDS and self.input_path is None:
            raise ValueError(f"{cmd} needs an input document")
        if cmd == "verify" and self.cert_path is None:
            raise ValueError("verify needs a certificate document")
        if cmd != "verify" and self.cert_path is not None:
            raise ValueError("a certificate document is only read by verify")
        if cmd in _ARITY and len(self.args) != _ARITY[cmd]:
            raise ValueError(f"{cmd} takes {_ARITY[cmd]} integer arguments")
        if cmd not in _ARITY and self.args:
            raise ValueError(f"{cmd} takes no positional integers")
        if self.reduced and cmd != "certify":
            raise ValueError("--reduced only applies to certify")
        if self.mode is not None and cmd != "certify":
            raise ValueError("--mode only applies to certify")
        if not self.check and cmd != "certify":
            raise ValueError("--no-check only applies to certify")
        if self.dmax is not None and cmd not in ("mindeg", "demo-degree"):
            raise ValueError("--dmax only applies to mindeg and demo degree")
        if self.oracle and not cmd.startswith("demo-"):
            raise ValueError("--oracle only applies to the demos")
        if cmd == "lucas":
            n, m, p = self.args
            if n < 0 or m < 0 or m > n:
                raise ValueError("lucas needs 0 <= m <= n")
        return self


def _render(obj: Any, config: CliConfig, system: Optional[PolySystem] = None) -> str:
    if config.output_format == "text":
        return serialize(obj, system)
    return OutputFormatter.format_data(to_record(obj, system), config.output_format)


def _certify(config: CliConfig, settings: Settings, cap: int) -> ReturnResponse:
    system = parse_system(read_input(config.input_path))
    mode = config.mode or ("t1" if system.field.is_finite and system.X.is_all else "t2")
    check = config.check and settings.check_containment
    _LOG.info(f"certify mode={mode} field={system.field} m={system.m} n={system.nvars}")
    if mode == "t1" and not system.X.is_all:
        raise NotApplicableError("--mode t1 needs X = all; use --mode t2")
    try:
        if mode == "t1":
            cert = certify_t1(system, check=check, cap=cap)
        else:
            cert = certify_t2(system, check=check, cap=cap)
    except ContainmentError as exc:
        witness = format_point(system.field, exc.witness) if exc.witness is not None else None
        return ReturnResponse.fail(ExitCode.PRECONDITION, str(exc), witness=witness)
    if config.reduced:
        if cert.reduced_R is None:
            raise NotApplicableError("reduced cofactors need a finite field")
        cert = dataclasses.replace(cert, R=cert.reduced_R, reduced_R=None)
    return ReturnResponse.ok(_render(cert, config, system), msg=f"certificate ({cert.mode})")


def _verify(config: CliConfig, cap: int) -> ReturnResponse:
    system = parse_system(read_input(config.input_path))
    cert = parse_certificate(read_input(config.cert_path), system)
    report = verify(system, cert, cap)
    text = _render(report, config, system)
    if report.ok:
        return ReturnResponse.ok(text, msg="verified")
    witness = format_point(system.field, report.witness) if report.witness is not None else None
    return ReturnResponse.fail(ExitCode.NEGATIVE, f"not verified: {report.reason}", data=text, witness=witness)


def _reduce(config: CliConfig) -> ReturnResponse:
    system = parse_system(read_input(config.input_path))
    reduced = dataclasses.replace(
        system,
        P=tuple(normal_form(p) for p in system.P),
        Q=normal_form(system.Q),
    )
    if config.output_format == "text":
        return ReturnResponse.ok(serialize_system(reduced), msg="reduced")
    record = {f"P{i}": format_poly(p, reduced.var_names) for i, p in enumerate(reduced.P, start=1)}
    record["Q"] = format_poly(reduced.Q, reduced.var_names)
    return ReturnResponse.ok(OutputFormatter.format_data(record, config.output_format), msg="reduced")


def _mindeg(config: CliConfig, settings: Settings, cap: int) -> ReturnResponse:
    system = parse_system(read_input(config.input_path))
    dmax = config.dmax if config.dmax is not None else settings.default_dmax
    report = min_degree(system, dmax, cap)
    text = _render(report, config, system)
    if report.found:
        return ReturnResponse.ok(text, msg=f"min_degree {report.min_degree}")
    return ReturnResponse.negative(text, msg=f"none ≤ {dmax}")


def _lucas(config: CliConfig) -> ReturnResponse:
    n, m, p = config.args
    verdict = lucas_nonzero(n, m, p)
    word = "nonzero" if verdict else "zero"
    if config.output_format == "text":
        text = word + "\n"
    else:
        record = {
            "n": n,
            "m": m,
            "p": p,
            "verdict": word,
            "digits_n": ",".join(map(str, base_p_digits(n, p))),
            "digits_m": ",".join(map(str, base_p_digits(m, p))),
        }
        text = OutputFormatter.format_data(record, config.output_format)
    if verdict:
        return ReturnResponse.ok(text, msg=word)
    return ReturnResponse.negative(text, msg=word)


def _demo(config: CliConfig, cap: int) -> ReturnResponse:
    if config.command == "demo-field-size":
        report = demo_field_size(config.args[0], config.oracle, cap)
    elif config.command == "demo-degree":
        n, k, q = config.args
        report = demo_degree(n, k, q, config.oracle, dmax=config.dmax, cap=cap)
    else:
        report = demo_interp(config.args[0], config.oracle, cap)
    return ReturnResponse.ok(_render(report, config), msg=report.instance)


def _dispatch(config: CliConfig, settings: Settings) -> ReturnResponse:
    cap = config.cap if config.cap is not None else settings.enumeration_cap
    if config.command == "certify":
        return _certify(config, settings, cap)
    if config.command == "verify":
        return _verify(config, cap)
    if config.command == "reduce":
        return _reduce(config)
    if config.command == "mindeg":
        return _mindeg(config, settings, cap)
    if config.command == "lucas":
        return _lucas(config)
    return _demo(config, cap)


def build_config(**values: Any) -> Any:
    """CliConfig from keyword values, or a USAGE response when invalid."""
    try:
        return CliConfig(**values)
    except ValidationError as exc:
        first = exc.errors()[0]
        return ReturnResponse.fail(ExitCode.USAGE, str(first.get("msg", exc)).removeprefix("Value error, "))


def run(config: CliConfig, settings: Optional[Settings] = None) -> ReturnResponse:
    """Execute one command.

    Args:
        config: Validated invocation.
        settings: Loaded settings; defaults apply when omitted.

    Returns:
        ReturnResponse: ``code`` is the exit status, ``data`` the output text.
    """
    settings = settings or Settings()
    try:
        return _dispatch(config, settings)
    except ContainmentError as exc:
        witness = str(exc.witness) if exc.witness is not None else None
        return ReturnResponse.fail(ExitCode.PRECONDITION, str(exc), witness=witness)
    except (ParseError, FieldError, ConfigError) as exc:
        return ReturnResponse.fail(ExitCode.USAGE, str(exc))
    except (NotApplicableError, EnumerationCapError, InvalidSystemError, PolynomialError) as exc:
        return ReturnResponse.fail(ExitCode.PRECONDITION, str(exc))
    except InconsistencyError as exc:
        _LOG.error(f"internal inconsistency: {exc}")
        return ReturnResponse.fail(ExitCode.PRECONDITION, f"internal inconsistency: {exc}")
    except ImportError as exc:
        return ReturnResponse.fail(ExitCode.USAGE, str(exc))
