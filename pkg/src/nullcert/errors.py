"""Exception hierarchy shared by every nullcert module."""

from __future__ import annotations

from typing import Any, Optional, Sequence


class NullcertError(Exception):
    """Base error for nullcert."""


class FieldError(NullcertError):
    """Invalid field specification (non-prime p, reducible modulus, bad k)."""


class FieldMismatchError(NullcertError):
    """Operands live in different fields."""


class FieldDivisionError(NullcertError, ZeroDivisionError):
    """Division by the zero element."""


class PolynomialError(NullcertError):
    """Shape mismatch between polynomials, points or evaluation sets."""


class EnumerationCapError(NullcertError):
    """An exhaustive walk would exceed the configured enumeration cap."""

    def __init__(self, size: Any, cap: int) -> None:
        """
        初始化对象。

        Args:
            size: Number of points that would be enumerated.
            cap: Configured cap.
        """
        super().__init__(f"enumeration of {size} points exceeds cap {cap}")
        self.size = size
        self.cap = cap


class InvalidSystemError(NullcertError):
    """A polynomial system violates its structural invariants."""


class NotApplicableError(NullcertError):
    """Operation called outside its precondition."""


class ContainmentError(NullcertError):
    """Z(P_1..P_m) is not contained in Z(Q) on the checked set."""

    def __init__(self, message: str, *, witness: Optional[Sequence[Any]] = None) -> None:
        """
        初始化对象。

        Args:
            message: Human readable reason.
            witness: Point of X where every P_i vanishes but Q does not.
        """
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else None


class ParseError(NullcertError):
    """Syntax or validation error in a system document."""

    def __init__(self, message: str, *, line: int = 0, column: int = 0) -> None:
        """
        初始化对象。

        Args:
            message: Error description.
            line: 1-based line number, 0 when unknown.
            column: 1-based column number, 0 when unknown.
        """
        location = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{location}{message}")
        self.reason = message
        self.line = line
        self.column = column


class InconsistencyError(NullcertError):
    """Two independent computations of the same fact disagree."""


class ConfigError(NullcertError):
    """Settings file unreadable or settings values invalid."""
