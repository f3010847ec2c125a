#!/usr/bin/env python3

"""Tests for system and certificate documents."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest

from nullcert.certgen import certify_t1, verify
from nullcert.errors import ParseError
from nullcert.fields import QQ
from nullcert.finitesatz import certify_t2
from nullcert.mpoly import MultiPoly
from nullcert.oracle import min_degree
from nullcert.sysio import (
    parse_certificate,
    parse_field,
    parse_system,
    serialize,
    serialize_certificate,
    serialize_system,
    to_record,
)

CORPUS = Path(__file__).parent / "corpus"

CANONICAL = {
    "gf7_two_generators.sys": "field GF(7)\nvars x y\nP: x^2+1\nP: x*y+4\nQ: 1\n",
    "gf9_generator.sys": "field GF(3^2) mod t^2+1\nvars x\nP: t*x+1\nQ: x^2+2*x\n",
    "qq_interpolation.sys": "field QQ\nvars x\nP: x^2\nQ: x\nX: (-2),(-1),(1),(2)\n",
    "qq_images_sample.sys": (
        "field QQ\nvars x y\nP: x^2+y^2+1\nQ: 1\nimages: 1: 1, 2, 5\nsample: (0,0),(1,0),(1/2,3)\n"
    ),
    "gf3_subset.sys": "field GF(3)\nvars a b\nP: a*b\nP: a+2*b\nQ: a^2+2*b^2\nX: (0,0),(1,2),(2,1),(1,1)\n",
    "gf4_explicit_modulus.sys": "field GF(2^2) mod t^2+t+1\nvars x y\nP: x*y+t\nQ: x*y+t\n",
}


def _read(name: str) -> str:
    return (CORPUS / name).read_text(encoding="utf-8")


@pytest.mark.parametrize("name", sorted(CANONICAL))
def test_corpus_canonical_text(name: str) -> None:
    system = parse_system(_read(name))
    text = serialize_system(system)
    assert text == CANONICAL[name]
    assert parse_system(text) == system


def test_parse_values() -> None:
    system = parse_system(_read("gf7_two_generators.sys"))
    assert system.m == 2 and system.nvars == 2
    assert system.var_names == ("x", "y")
    assert system.X.is_all
    assert system.P[1].coefficient((0, 0)) == 4
    assert system.Q == MultiPoly.one(system.field, 2)


def test_parse_bytes_and_extension_generator() -> None:
    system = parse_system(_read("gf9_generator.sys").encode("utf-8"))
    assert system.field.q == 9
    assert system.P[0].coefficient((1,)) == system.field.generator()


def test_parse_rationals_and_sample() -> None:
    system = parse_system(_read("qq_images_sample.sys"))
    assert system.field == QQ
    assert system.images == ((Fraction(1), Fraction(2), Fraction(5)),)
    assert system.sample[2] == (Fraction(1, 2), Fraction(3))


@pytest.mark.parametrize(
    ("text", "line", "column", "reason"),
    [
        ("field GF(7)\nvars x y\nP: x + z\nQ: 1\n", 3, 8, "undeclared variable z"),
        ("field GF(7)\nvars x\nP: x\n", 0, 0, "missing Q line"),
        ("field GF(7)\nvars x\nQ: 1\n", 0, 0, "at least one P line is required"),
        ("field GF(7)\nvars x\nP: x\nQ: 1\nQ: 2\n", 5, 1, "duplicate Q"),
        ("field GF(7)\nvars x\nZ: 1\n", 3, 1, "unknown directive 'Z'"),
        ("vars x\nfield GF(7)\n", 1, 1, "field must come before vars"),
        ("field GF(7)\nP: x\n", 2, 1, "field and vars must come first"),
        ("field GF(7)\nvars x\nP: x ^ y\nQ: 1\n", 3, 8, "exponent must be a nonnegative integer literal, found 'y'"),
        ("field GF(7)\nvars x\nP: x^100001\nQ: 1\n", 3, 6, "exponent 100001 exceeds 100000"),
        ("field GF(7)\nvars x\nP: (x + 1\nQ: 1\n", 3, 10, "expected ')', found end of line"),
        ("field GF(7)\nvars x\nP: t*x\nQ: 1\n", 3, 4, "t is only defined in extension fields"),
        ("field GF(7)\nvars x\nP: x/2\nQ: 1\n", 3, 5, "division is only allowed inside a rational literal, found '/'"),
        ("field GF(7)\nvars t\n", 2, 5, "t is reserved for the extension generator"),
        ("field GF(7)\nvars x x\n", 2, 5, "duplicate variable name"),
        ("field GF(6)\nvars x\n", 1, 6, "6 is not a prime power"),
        ("field QQ\nvars x\nP: x\nQ: 1\nX: (1, 2)\n", 5, 4, "point has 2 coordinates, expected 1"),
        ("field GF(7)\nvars x\nP: x\nQ: 1\nimages: 2: 1\n", 5, 8, "image index 2 exceeds the 1 generators"),
    ],
)
def test_parse_errors_are_located(text: str, line: int, column: int, reason: str) -> None:
    with pytest.raises(ParseError) as exc:
        parse_system(text)
    assert exc.value.reason == reason
    assert exc.value.line == line
    assert exc.value.column == column


@pytest.mark.parametrize(
    "text",
    [
        b"field GF(7)\nvars x\nP: \xff\n",
        "field GF(7)\nvars x\nP: 1/2*x\nQ: 1\n",
        "field GF(7)\nvars x\nP: x\nQ: 1\nX: (1), (8)\n",
        "field GF(7)\nvars x\nP: " + "(" * 200 + "x" + ")" * 200 + "\nQ: 1\n",
        "field GF(7)\nvars x\nP: " + "-" * 300 + "x\nQ: 1\n",
        "field GF(7)\nvars x\nP: " + "9" * 1001 + "\nQ: 1\n",
        "field QQ\nvars x\nP: 3^70000\nQ: 1\n",
        "field GF(2^30)\nvars x\n",
        "field GF(2^1000000000000)\nvars x\n",
        "field GF(3^2) mod t^2 + 1 + t\nvars x\n",
        "field GF(3^2) mod t^2 + 2\nvars x\n",
        "field QQ mod t\nvars x\n",
        "field GF(7)\nvars x\nP: 0\nQ: 0\n",
        "field GF(7)\nvars x\nP: x\nQ: 1\nimages: 1: 1\nimages: 1: 2\n",
        "",
    ],
)
def test_parse_rejects(text) -> None:
    with pytest.raises(ParseError):
        parse_system(text)


def test_large_monomial_power_is_accepted() -> None:
    system = parse_system("field QQ\nvars x\nP: x^70000\nQ: 1\n")
    assert system.P[0].coefficient((70000,)) == 1


def test_parse_field() -> None:
    assert parse_field("QQ") == QQ
    assert parse_field("GF(8)").modulus == (1, 0, 1, 1)
    assert parse_field("GF( 5 )").q == 5
    assert parse_field("GF(7^1)").kind == "prime"


def test_certificate_round_trip_finite_field() -> None:
    system = parse_system(_read("gf7_two_generators.sys"))
    cert = certify_t1(system)
    text = serialize_certificate(cert, system)
    back = parse_certificate(text, system)
    assert back.R == cert.R
    assert back.reduced_R == cert.reduced_R
    assert back.refined_bounds == cert.refined_bounds
    assert back.claimed_bound == cert.claimed_bound
    assert back.mode == "theorem1-weak"
    assert verify(system, back).ok


def test_certificate_round_trip_rationals() -> None:
    system = parse_system(_read("qq_interpolation.sys"))
    cert = certify_t2(system)
    back = parse_certificate(serialize(cert, system), system)
    assert back.R == cert.R
    assert back.trivial_bound is None and back.reduced_R is None
    assert verify(system, back).ok


def test_certificate_canonical_text() -> None:
    system = parse_system("field GF(3)\nvars x\nP: x\nQ: x\n")
    text = serialize(certify_t1(system), system)
    assert text == (
        "field GF(3)\nvars x\nmode: theorem1\nclaimed_bound: 2\nR1: x^2\nreduced R1: x^2\n"
        "# report\nraw_degree: 2\nreduced_degree: 2\nrefined_bound: 2\ntrivial_bound: 2\n"
        "containment: checked\n"
    )


@pytest.mark.parametrize(
    "text",
    [
        "field GF(3)\nvars x\nclaimed_bound: 2\nR1: x\n",
        "field GF(3)\nvars x\nmode: guess\nclaimed_bound: 2\nR1: x\n",
        "field GF(3)\nvars x\nmode: oracle\nR1: x\n",
        "field GF(3)\nvars x\nmode: oracle\nclaimed_bound: 2\nR2: x\n",
        "field GF(3)\nvars x\nmode: oracle\nclaimed_bound: 2\nR1: x\nR1: x\n",
        "field GF(3)\nvars x\nmode: oracle\nclaimed_bound: two\nR1: x\n",
        "field GF(3)\nvars x\nmode: oracle\nclaimed_bound: 2\nR1: x\nrefined_bound: 1, 2\n",
        "field GF(5)\nvars x\nmode: oracle\nclaimed_bound: 2\nR1: x\n",
        "field GF(3)\nvars y\nmode: oracle\nclaimed_bound: 2\nR1: y\n",
    ],
)
def test_certificate_rejects(text: str) -> None:
    system = parse_system("field GF(3)\nvars x\nP: x\nQ: x\n")
    with pytest.raises(ParseError):
        parse_certificate(text, system)


def test_mindeg_text() -> None:
    system = parse_system("field GF(3)\nvars x\nP: x^2 + 1\nQ: 1\n")
    found = serialize(min_degree(system, 2), system)
    assert found.startswith("min_degree: 2\ndmax: 2\nconstruction_degree: 2\nmonomial_count: 3\nequation_count: 3\n")
    assert "# witness\nfield GF(3)\nvars x\nmode: oracle\n" in found
    missing = serialize(min_degree(system, 1), system)
    assert missing.startswith("min_degree: none ≤ 1\n")


def test_serialize_needs_system() -> None:
    system = parse_system("field GF(3)\nvars x\nP: x\nQ: x\n")
    with pytest.raises(TypeError):
        serialize(certify_t1(system))


def test_verify_report_carries_refined_bound() -> None:
    system = parse_system(_read("gf7_two_generators.sys"))
    cert = certify_t1(system)
    report = verify(system, cert)
    assert report.ok
    assert report.refined_bounds == cert.refined_bounds
    text = serialize(report, system)
    refined = ", ".join(str(b) for b in cert.refined_bounds)
    assert f"\nrefined_bound: {refined}\n" in text
    assert to_record(report, system)["refined_bound"] == refined


def test_verify_report_without_refined_bound() -> None:
    system = parse_system("field GF(3)\nvars x\nP: x\nQ: x\n")
    cert = parse_certificate("field GF(3)\nvars x\nmode: oracle\nclaimed_bound: 2\nR1: 1\n", system)
    report = verify(system, cert)
    assert report.ok and report.refined_bounds is None
    assert "refined_bound" not in serialize(report, system)
    assert "refined_bound" not in to_record(report, system)


CORPUS_DOCUMENTS = sorted(path.name for path in CORPUS.iterdir() if path.suffix in (".sys", ".cert"))
CERTIFICATES = [name for name in CORPUS_DOCUMENTS if name.endswith(".cert")]


def _paired_system(name: str):
    return parse_system(_read(name.split(".", 1)[0] + ".sys"))


def test_corpus_covers_both_constructions() -> None:
    assert len(CORPUS_DOCUMENTS) >= 50
    modes = {parse_certificate(_read(name)).mode for name in CERTIFICATES}
    assert {"theorem1", "theorem1-weak", "theorem2", "oracle"} <= modes


@pytest.mark.parametrize("name", CORPUS_DOCUMENTS)
def test_corpus_round_trip(name: str) -> None:
    if name.endswith(".sys"):
        system = parse_system(_read(name))
        again = parse_system(serialize_system(system))
        assert again == system
        assert serialize_system(again) == serialize_system(system)
        return
    system = _paired_system(name)
    cert = parse_certificate(_read(name), system)
    again = parse_certificate(serialize_certificate(cert, system), system)
    assert again == cert


@pytest.mark.parametrize("name", CERTIFICATES)
def test_corpus_certificates_verify(name: str) -> None:
    system = _paired_system(name)
    report = verify(system, parse_certificate(_read(name), system))
    assert report.ok, report.reason
