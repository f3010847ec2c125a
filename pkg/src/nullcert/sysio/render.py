#!/usr/bin/env python3

"""Canonical text for field elements, polynomials, points and degrees."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, Mapping, Sequence

from ..fields import FieldDesc
from ..mpoly import Degree, Monomial, MultiPoly


def format_degree(deg: Degree) -> str:
    if deg == float("-inf"):
        return "-inf"
    if deg == float("inf"):
        return "inf"
    return str(int(deg))


def format_degrees(degrees: Iterable[Degree]) -> str:
    return ", ".join(format_degree(d) for d in degrees)


def format_monomial(mono: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, mono):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def _coefficient(field: FieldDesc, c: Any) -> str:
    text = field.format(c)
    if field.kind == "extension" and ("+" in text):
        return f"({text})"
    return text


def format_poly(poly: MultiPoly, names: Sequence[str]) -> str:
    """Terms in descending graded-lex order, e.g. ``3*x1^2*x2+x2+6``.

    Rational coefficients carry their sign; finite-field coefficients are
    printed as canonical residues.
    """
    field = poly.field
    parts = []
    for mono, c in poly.sorted_terms():
        sign = "+"
        if field.kind == "rationals" and c < 0:
            sign, c = "-", -c
        mono_text = format_monomial(mono, names)
        if not mono_text:
            body = _coefficient(field, c)
        elif c == field.one:
            body = mono_text
        else:
            body = f"{_coefficient(field, c)}*{mono_text}"
        if parts or sign == "-":
            parts.append(sign)
        parts.append(body)
    return "".join(parts) if parts else "0"


def format_element(field: FieldDesc, value: Any) -> str:
    return field.format(value)


def format_point(field: FieldDesc, point: Sequence[Any]) -> str:
    return "(" + ",".join(field.format(c) for c in point) + ")"


def format_points(field: FieldDesc, points: Iterable[Sequence[Any]]) -> str:
    return ",".join(format_point(field, p) for p in points)


def format_record(record: Mapping[str, Any]) -> str:
    """Flat ``key = value`` lines."""
    lines = []
    for key, value in record.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, (list, tuple)):
            value = ", ".join(str(v) for v in value)
        elif isinstance(value, Fraction):
            value = str(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def plain_record(record: Mapping[str, Any]) -> Dict[str, Any]:
    """Record with values converted to JSON/TOML friendly scalars."""
    out: Dict[str, Any] = {}
    for key, value in record.items():
        if isinstance(value, float) and value in (float("inf"), float("-inf")):
            value = format_degree(value)
        elif isinstance(value, Fraction):
            value = str(value)
        elif isinstance(value, (list, tuple)):
            value = [format_degree(v) if isinstance(v, float) else v for v in value]
        out[key] = value
    return out
