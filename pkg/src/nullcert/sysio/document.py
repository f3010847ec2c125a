#!/usr/bin/env python3

"""System and certificate documents: parsing and canonical serialization.

A document is a sequence of directives, one per line; ``#`` starts a
comment. See ``docs/FORMAT.md`` for the grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from sympy import factorint

from ..certgen import Certificate, PolySystem, VerifyReport
from ..errors import NullcertError, ParseError
from ..fields import QQ, FieldDesc, make_field
from ..lowerbounds import LowerBoundReport
from ..mpoly import NEG_INF, Degree, EvalSet, MultiPoly
from ..oracle import MinDegReport
from .expr import GENERATOR, ExprParser, parse_poly
from .render import format_degree, format_degrees, format_element, format_points, format_poly


MAX_DOCUMENT_BYTES = 1 << 20
MAX_FIELD_DIGITS = 12

_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_KEYWORD_RE = re.compile(r"^(\s*)(field|vars)(?=\s|$)(.*)$")
_DIRECTIVE_RE = re.compile(r"^(\s*)((?:reduced\s+)?[A-Za-z_][A-Za-z0-9_]*)\s*:(.*)$")
_FIELD_RE = re.compile(r"^(QQ|GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?\))\s*(?:mod\s+(.+?))?\s*$")
_IMAGE_RE = re.compile(r"^(\s*)(\d+)\s*:(.*)$")
_DEGREE_RE = re.compile(r"^-inf$|^\d+$")

SYSTEM_KEYS = ("P", "Q", "X", "images", "sample")
CERT_SCALAR_KEYS = ("mode", "claimed_bound", "trivial_bound", "containment")
CERT_LIST_KEYS = ("raw_degree", "reduced_degree", "refined_bound")
CERT_MODES = ("theorem1", "theorem1-weak", "theorem2", "oracle")


@dataclass
class Directive:
    line: int
    key: str
    value: str
    column: int


@dataclass
class _Header:
    field: Optional[FieldDesc] = None
    var_names: Tuple[str, ...] = ()
    seen_vars: bool = False
    body: List[Directive] = dc_field(default_factory=list)


def _decode(text: Union[str, bytes]) -> str:
    if isinstance(text, (bytes, bytearray)):
        if len(text) > MAX_DOCUMENT_BYTES:
            raise ParseError(f"document larger than {MAX_DOCUMENT_BYTES} bytes")
        try:
            return bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"document is not valid UTF-8 (byte {exc.start})") from exc
    if len(text) > MAX_DOCUMENT_BYTES:
        raise ParseError(f"document larger than {MAX_DOCUMENT_BYTES} characters")
    return text


def _directives(text: str) -> List[Directive]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        match = _KEYWORD_RE.match(content)
        if match:
            out.append(Directive(lineno, match.group(2), match.group(3), len(match.group(1)) + len(match.group(2)) + 1))
            continue
        match = _DIRECTIVE_RE.match(content)
        if not match:
            column = len(content) - len(content.lstrip()) + 1
            raise ParseError("expected a directive such as 'P: ...'", line=lineno, column=column)
        key = " ".join(match.group(2).split())
        out.append(Directive(lineno, key, match.group(3), match.start(3) + 1))
    return out


def parse_field(spec: str, *, line: int = 0, column: int = 1) -> FieldDesc:
    """``QQ``, ``GF(p)``, ``GF(q)``, ``GF(p^k)``, optionally ``mod <poly in t>``.

    Raises:
        ParseError: Malformed or invalid field.
    """
    match = _FIELD_RE.match(spec.strip())
    if not match:
        raise ParseError(f"unknown field {spec.strip()!r}", line=line, column=column)
    if match.group(1) == "QQ":
        if match.group(4):
            raise ParseError("QQ takes no modulus", line=line, column=column)
        return QQ
    base, exp, mod_text = match.group(2), match.group(3), match.group(4)
    if len(base) > MAX_FIELD_DIGITS or (exp and len(exp) > MAX_FIELD_DIGITS):
        raise ParseError("field order too large", line=line, column=column)
    try:
        if exp is not None:
            p, k = int(base), int(exp)
        else:
            order = int(base)
            if order < 2 or order >= 2**32:
                raise ParseError(f"unsupported field order {order}", line=line, column=column)
            factors = factorint(order)
            if len(factors) != 1:
                raise ParseError(f"{order} is not a prime power", line=line, column=column)
            (p, k), = factors.items()
            p, k = int(p), int(k)
        if k == 1 and not mod_text:
            return make_field("prime", p)
        modulus = None
        if mod_text:
            prime = make_field("prime", p)
            poly = parse_poly(mod_text, prime, (GENERATOR,), line=line, col_offset=column - 1 + spec.index(mod_text))
            if poly.is_zero():
                raise ParseError("modulus must be nonzero", line=line, column=column)
            top = max(mono[0] for mono in poly.terms)
            modulus = [poly.coefficient((i,)) for i in range(top + 1)]
        return make_field("extension", p, k, modulus)
    except ParseError:
        raise
    except NullcertError as exc:
        raise ParseError(str(exc), line=line, column=column) from exc


def _parse_vars(d: Directive) -> Tuple[str, ...]:
    names = tuple(d.value.replace(",", " ").split())
    if not names:
        raise ParseError("vars needs at least one name", line=d.line, column=d.column)
    for name in names:
        if not _IDENT_RE.match(name):
            raise ParseError(f"invalid variable name {name!r}", line=d.line, column=d.column)
        if name == GENERATOR:
            raise ParseError(f"{GENERATOR} is reserved for the extension generator", line=d.line, column=d.column)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", line=d.line, column=d.column)
    return names


def _split_header(text: Union[str, bytes], allowed: Sequence[str], *, cofactors: bool = False) -> _Header:
    header = _Header()
    for d in _directives(_decode(text)):
        if d.key == "field":
            if header.field is not None:
                raise ParseError("duplicate field line", line=d.line, column=1)
            header.field = parse_field(d.value, line=d.line, column=d.column)
        elif d.key == "vars":
            if header.field is None:
                raise ParseError("field must come before vars", line=d.line, column=1)
            if header.seen_vars:
                raise ParseError("duplicate vars line", line=d.line, column=1)
            header.var_names = _parse_vars(d)
            header.seen_vars = True
        elif d.key in allowed or (cofactors and _is_cofactor(d.key.removeprefix("reduced "))):
            if not header.seen_vars:
                raise ParseError("field and vars must come first", line=d.line, column=1)
            header.body.append(d)
        else:
            raise ParseError(f"unknown directive {d.key!r}", line=d.line, column=1)
    if header.field is None:
        raise ParseError("missing field line")
    if not header.seen_vars:
        raise ParseError("missing vars line")
    return header


def _is_cofactor(key: str) -> bool:
    return re.fullmatch(r"R[1-9]\d*", key) is not None


def _parser(header: _Header, d: Directive) -> ExprParser:
    return ExprParser(d.value, header.field, header.var_names, line=d.line, col_offset=d.column - 1)


def _guard(d: Directive, fn: Callable[[], Any]) -> Any:
    """Run ``fn`` converting library errors into a located ParseError."""
    try:
        return fn()
    except ParseError:
        raise
    except NullcertError as exc:
        raise ParseError(str(exc), line=d.line, column=d.column) from exc


def parse_system(text: Union[str, bytes]) -> PolySystem:
    """Parse a system document.

    Raises:
        ParseError: Syntax error (with line and column), undeclared variable,
            coefficient outside the field, duplicate or missing directives.
    """
    try:
        return _parse_system(text)
    except ParseError:
        raise
    except (NullcertError, RecursionError, ValueError, OverflowError, MemoryError) as exc:
        raise ParseError(f"invalid document: {exc}") from exc


def _parse_system(text: Union[str, bytes]) -> PolySystem:
    header = _split_header(text, SYSTEM_KEYS)
    field, names = header.field, header.var_names
    n = len(names)
    P: List[MultiPoly] = []
    Q: Optional[MultiPoly] = None
    X: Optional[EvalSet] = None
    seen_x = False
    images: Dict[int, Tuple[Any, ...]] = {}
    image_lines: Dict[int, Directive] = {}
    sample: Optional[Tuple[Tuple[Any, ...], ...]] = None

    for d in header.body:
        if d.key == "P":
            P.append(parse_poly(d.value, field, names, line=d.line, col_offset=d.column - 1))
        elif d.key == "Q":
            if Q is not None:
                raise ParseError("duplicate Q", line=d.line, column=1)
            Q = parse_poly(d.value, field, names, line=d.line, col_offset=d.column - 1)
        elif d.key == "X":
            if seen_x:
                raise ParseError("duplicate X", line=d.line, column=1)
            seen_x = True
            if d.value.strip() == "all":
                continue
            parser = _parser(header, d)
            points = parser.parse_point_list(n)
            X = _guard(d, lambda: EvalSet.explicit(field, n, points))
        elif d.key == "sample":
            if sample is not None:
                raise ParseError("duplicate sample", line=d.line, column=1)
            sample_points = _parser(header, d).parse_point_list(n)
            sample = _guard(d, lambda: EvalSet.explicit(field, n, sample_points)).points
        elif d.key == "images":
            match = _IMAGE_RE.match(d.value)
            if not match:
                raise ParseError("expected 'images: <index>: v1, v2, ...'", line=d.line, column=d.column)
            index = int(match.group(2)) if len(match.group(2)) <= 6 else 0
            if index < 1:
                raise ParseError("image index must be >= 1", line=d.line, column=d.column)
            if index in images:
                raise ParseError(f"duplicate image for P{index}", line=d.line, column=1)
            value_col = d.column + match.start(3)
            parser = ExprParser(match.group(3), field, names, line=d.line, col_offset=value_col - 1)
            images[index] = tuple(parser.parse_value_list())
            image_lines[index] = d

    if not P:
        raise ParseError("at least one P line is required")
    if Q is None:
        raise ParseError("missing Q line")
    image_tuple = None
    if images:
        for index, d in image_lines.items():
            if index > len(P):
                raise ParseError(f"image index {index} exceeds the {len(P)} generators", line=d.line, column=d.column)
        if len(images) != len(P):
            raise ParseError("images must be given for every generator")
        image_tuple = tuple(images[i] for i in range(1, len(P) + 1))
    return PolySystem(
        field=field,
        nvars=n,
        P=tuple(P),
        Q=Q,
        X=X,
        var_names=names,
        images=image_tuple,
        sample=sample,
    )


def _parse_degree(d: Directive, text: str) -> Degree:
    text = text.strip()
    if not _DEGREE_RE.match(text) or len(text) > MAX_FIELD_DIGITS:
        raise ParseError(f"invalid degree {text!r}", line=d.line, column=d.column)
    return NEG_INF if text == "-inf" else int(text)


def parse_certificate(text: Union[str, bytes], system: Optional[PolySystem] = None) -> Certificate:
    """Parse a certificate document.

    Args:
        text: Document text.
        system: When given, the certificate's field and variables must match.

    Raises:
        ParseError: Malformed document or mismatch with ``system``.
    """
    try:
        return _parse_certificate(text, system)
    except ParseError:
        raise
    except (NullcertError, RecursionError, ValueError, OverflowError, MemoryError) as exc:
        raise ParseError(f"invalid certificate: {exc}") from exc


def _parse_certificate(text: Union[str, bytes], system: Optional[PolySystem]) -> Certificate:
    header = _split_header(text, ("warning", *CERT_SCALAR_KEYS, *CERT_LIST_KEYS), cofactors=True)
    if system is not None:
        if header.field != system.field:
            raise ParseError(f"certificate field {header.field} differs from system field {system.field}")
        if header.var_names != tuple(system.var_names):
            raise ParseError("certificate variables differ from the system")
    field, names = header.field, header.var_names
    scalars: Dict[str, Directive] = {}
    raw: Dict[int, MultiPoly] = {}
    reduced: Dict[int, MultiPoly] = {}
    warnings: List[str] = []
    refined: Optional[Tuple[Degree, ...]] = None
    seen_lists: set = set()

    for d in header.body:
        if d.key in CERT_SCALAR_KEYS:
            if d.key in scalars:
                raise ParseError(f"duplicate {d.key}", line=d.line, column=1)
            scalars[d.key] = d
        elif d.key == "warning":
            warnings.append(d.value.strip())
        elif d.key in CERT_LIST_KEYS:
            if d.key in seen_lists:
                raise ParseError(f"duplicate {d.key}", line=d.line, column=1)
            seen_lists.add(d.key)
            degrees = tuple(_parse_degree(d, part) for part in d.value.split(","))
            if d.key == "refined_bound":
                refined = degrees
        else:
            target = reduced if d.key.startswith("reduced ") else raw
            index = int(d.key.split("R", 1)[1])
            if index in target:
                raise ParseError(f"duplicate {d.key}", line=d.line, column=1)
            target[index] = parse_poly(d.value, field, names, line=d.line, col_offset=d.column - 1)

    if "mode" not in scalars:
        raise ParseError("missing mode line")
    mode = scalars["mode"].value.strip()
    if mode not in CERT_MODES:
        raise ParseError(f"unknown mode {mode!r}", line=scalars["mode"].line, column=scalars["mode"].column)
    if "claimed_bound" not in scalars:
        raise ParseError("missing claimed_bound line")
    claimed = _parse_degree(scalars["claimed_bound"], scalars["claimed_bound"].value)
    if not raw or sorted(raw) != list(range(1, len(raw) + 1)):
        raise ParseError("cofactors must be numbered R1..Rm without gaps")
    m = len(raw)
    if system is not None and m != system.m:
        raise ParseError(f"certificate has {m} cofactors, system has {system.m} generators")
    reduced_R = None
    if reduced:
        if sorted(reduced) != list(range(1, m + 1)):
            raise ParseError("reduced cofactors must match R1..Rm")
        reduced_R = tuple(reduced[i] for i in range(1, m + 1))
    if refined is not None and len(refined) != m:
        raise ParseError("refined_bound needs one entry per cofactor")
    trivial = None
    if "trivial_bound" in scalars:
        value = _parse_degree(scalars["trivial_bound"], scalars["trivial_bound"].value)
        trivial = None if value == NEG_INF else int(value)
    containment = scalars.get("containment")
    checked = True
    if containment is not None:
        state = containment.value.strip()
        if state not in ("checked", "unchecked"):
            raise ParseError("containment is 'checked' or 'unchecked'", line=containment.line, column=containment.column)
        checked = state == "checked"
    return Certificate(
        R=tuple(raw[i] for i in range(1, m + 1)),
        claimed_bound=claimed,
        mode=mode,
        reduced_R=reduced_R,
        refined_bounds=refined,
        trivial_bound=trivial,
        containment_checked=checked,
        warnings=tuple(warnings),
    )


# -- serialization ---------------------------------------------------------------


def _header_lines(field: FieldDesc, names: Sequence[str]) -> List[str]:
    return [f"field {field}", f"vars {' '.join(names)}"]


def serialize_system(system: PolySystem) -> str:
    names = system.var_names
    lines = _header_lines(system.field, names)
    lines += [f"P: {format_poly(p, names)}" for p in system.P]
    lines.append(f"Q: {format_poly(system.Q, names)}")
    if not system.X.is_all:
        lines.append(f"X: {format_points(system.field, system.X.points)}")
    if system.images is not None:
        for i, img in enumerate(system.images, start=1):
            values = ", ".join(format_element(system.field, system.field.canonical(v)) for v in img)
            lines.append(f"images: {i}: {values}")
    if system.sample is not None:
        lines.append(f"sample: {format_points(system.field, system.sample)}")
    return "\n".join(lines) + "\n"


def _certificate_lines(cert: Certificate, names: Sequence[str]) -> List[str]:
    lines = [f"mode: {cert.mode}", f"claimed_bound: {format_degree(cert.claimed_bound)}"]
    lines += [f"R{i}: {format_poly(r, names)}" for i, r in enumerate(cert.R, start=1)]
    if cert.reduced_R is not None:
        lines += [f"reduced R{i}: {format_poly(r, names)}" for i, r in enumerate(cert.reduced_R, start=1)]
    lines.append("# report")
    lines.append(f"raw_degree: {format_degrees(cert.raw_degrees)}")
    if cert.reduced_degrees is not None:
        lines.append(f"reduced_degree: {format_degrees(cert.reduced_degrees)}")
    if cert.refined_bounds is not None:
        lines.append(f"refined_bound: {format_degrees(cert.refined_bounds)}")
    if cert.trivial_bound is not None:
        lines.append(f"trivial_bound: {cert.trivial_bound}")
    lines.append(f"containment: {'checked' if cert.containment_checked else 'unchecked'}")
    lines += [f"warning: {w}" for w in cert.warnings]
    return lines


def serialize_certificate(cert: Certificate, system: PolySystem) -> str:
    lines = _header_lines(system.field, system.var_names) + _certificate_lines(cert, system.var_names)
    return "\n".join(lines) + "\n"


def serialize_mindeg(report: MinDegReport, system: PolySystem) -> str:
    lines = [f"min_degree: {mindeg_text(report)}", f"dmax: {report.dmax}"]
    if report.construction_degree is not None:
        lines.append(f"construction_degree: {format_degree(report.construction_degree)}")
    lines += [f"monomial_count: {report.monomial_count}", f"equation_count: {report.equation_count}"]
    if report.witness is not None:
        lines.append("# witness")
        lines += _header_lines(system.field, system.var_names)
        lines += _certificate_lines(report.witness, system.var_names)
    return "\n".join(lines) + "\n"


def mindeg_text(report: MinDegReport) -> str:
    if report.min_degree is None:
        return f"none ≤ {report.dmax}"
    return str(report.min_degree)


def serialize_lowerbound(report: LowerBoundReport) -> str:
    return "\n".join(f"{key}: {value}" for key, value in report.to_record().items()) + "\n"


def serialize_verify(report: VerifyReport, system: PolySystem) -> str:
    lines = [
        f"verified: {'true' if report.ok else 'false'}",
        f"reason: {report.reason}",
        f"raw_degree: {format_degrees(report.raw_degrees)}",
        f"claimed_bound: {format_degree(report.claimed_bound)}",
        f"points_checked: {report.points_checked}",
    ]
    if report.refined_bounds is not None:
        lines.append(f"refined_bound: {format_degrees(report.refined_bounds)}")
    if report.witness is not None:
        lines.append(f"witness: {format_points(system.field, [report.witness])}")
    lines += [f"note: {detail}" for detail in report.details]
    return "\n".join(lines) + "\n"


def serialize(obj: Any, system: Optional[PolySystem] = None) -> str:
    """Canonical text for a system, certificate or report.

    Certificates and oracle reports need ``system`` for the field and
    variable names.
    """
    if isinstance(obj, PolySystem):
        return serialize_system(obj)
    if isinstance(obj, LowerBoundReport):
        return serialize_lowerbound(obj)
    if system is None:
        raise TypeError(f"serializing {type(obj).__name__} needs the system")
    if isinstance(obj, Certificate):
        return serialize_certificate(obj, system)
    if isinstance(obj, MinDegReport):
        return serialize_mindeg(obj, system)
    if isinstance(obj, VerifyReport):
        return serialize_verify(obj, system)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_record(obj: Any, system: Optional[PolySystem] = None) -> Dict[str, Any]:
    """Flat record for ``key = value`` and structured output formats."""
    if isinstance(obj, LowerBoundReport):
        return obj.to_record()
    if isinstance(obj, MinDegReport):
        record: Dict[str, Any] = {
            "min_degree": mindeg_text(obj) if obj.min_degree is None else obj.min_degree,
            "dmax": obj.dmax,
            "monomial_count": obj.monomial_count,
            "equation_count": obj.equation_count,
        }
        if obj.construction_degree is not None:
            record["construction_degree"] = format_degree(obj.construction_degree)
        if obj.witness is not None and system is not None:
            for i, r in enumerate(obj.witness.R, start=1):
                record[f"R{i}"] = format_poly(r, system.var_names)
        return record
    if isinstance(obj, VerifyReport):
        record = {
            "verified": obj.ok,
            "reason": obj.reason,
            "raw_degree": format_degrees(obj.raw_degrees),
            "claimed_bound": format_degree(obj.claimed_bound),
            "points_checked": obj.points_checked,
        }
        if obj.refined_bounds is not None:
            record["refined_bound"] = format_degrees(obj.refined_bounds)
        if obj.witness is not None and system is not None:
            record["witness"] = format_points(system.field, [obj.witness])
        return record
    if isinstance(obj, Certificate):
        record = {"mode": obj.mode, "claimed_bound": format_degree(obj.claimed_bound)}
        if system is not None:
            for i, r in enumerate(obj.R, start=1):
                record[f"R{i}"] = format_poly(r, system.var_names)
        record["raw_degree"] = format_degrees(obj.raw_degrees)
        if obj.reduced_degrees is not None:
            record["reduced_degree"] = format_degrees(obj.reduced_degrees)
        if obj.refined_bounds is not None:
            record["refined_bound"] = format_degrees(obj.refined_bounds)
        if obj.trivial_bound is not None:
            record["trivial_bound"] = obj.trivial_bound
        record["containment"] = "checked" if obj.containment_checked else "unchecked"
        return record
    raise TypeError(f"no record form for {type(obj).__name__}")
