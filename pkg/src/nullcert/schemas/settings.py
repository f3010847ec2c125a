#!/usr/bin/env python3

from pydantic import BaseModel, Field, field_validator

from ..mpoly import DEFAULT_ENUM_CAP


LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Runtime settings; CLI flags override them per invocation."""

    enumeration_cap: int = Field(default=DEFAULT_ENUM_CAP, ge=1, description='max points walked exhaustively')
    default_dmax: int = Field(default=12, ge=0, description='oracle sweep limit when --dmax is absent')
    log_level: str = Field(default="WARNING", description='loguru level of the stderr sink')
    check_containment: bool = Field(default=True, description='check Z(P) ⊆ Z(Q) before constructing')

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value
