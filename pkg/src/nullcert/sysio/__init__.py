"""Text formats: system and certificate documents, reports and records."""

from .document import (
    parse_certificate,
    parse_field,
    parse_system,
    serialize,
    serialize_certificate,
    serialize_system,
    to_record,
)
from .expr import parse_poly
from .render import format_poly, format_record

__all__ = [
    "format_poly",
    "format_record",
    "parse_certificate",
    "parse_field",
    "parse_poly",
    "parse_system",
    "serialize",
    "serialize_certificate",
    "serialize_system",
    "to_record",
]
