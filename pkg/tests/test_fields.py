#!/usr/bin/env python3

"""Tests for exact field arithmetic."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from sympy import mod_inverse

from nullcert.errors import FieldDivisionError, FieldError, FieldMismatchError
from nullcert.fields import QQ, FieldElem, arith, least_irreducible, make_field, parse_elem, power, serialize_elem


def test_prime_field_basics(gf7) -> None:
    assert gf7.q == 7
    assert gf7.from_int(-1) == 6
    assert gf7.inv(3) == 5
    assert gf7.div(1, 3) == 5
    assert gf7.pow(0, 0) == 1
    assert list(gf7.elements()) == list(range(7))


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 101, 65537])
def test_prime_inverse_matches_sympy(p: int) -> None:
    field = make_field("prime", p)
    for a in range(1, min(p, 200)):
        assert field.inv(a) == mod_inverse(a, p)


def test_gf4_uses_least_irreducible(gf4) -> None:
    assert gf4.modulus == (1, 1, 1)
    t = gf4.generator()
    assert gf4.mul(t, t) == (1, 1)
    assert gf4.format((1, 1)) == "t+1"
    assert gf4.parse("t+1") == (1, 1)
    assert str(gf4) == "GF(2^2) mod t^2+t+1"


@pytest.mark.parametrize(("p", "k"), [(2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_extension_multiplicative_group(p: int, k: int) -> None:
    field = make_field("extension", p, k)
    assert field.q == p**k
    for a in field.elements():
        if field.is_zero(a):
            continue
        assert field.pow(a, field.q - 1) == field.one
        assert field.mul(a, field.inv(a)) == field.one


def test_least_irreducible_gf9() -> None:
    assert least_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize(("p", "k"), [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_least_irreducible_matches_sympy(p: int, k: int) -> None:
    t = sympy.Symbol("t")
    modulus = least_irreducible(p, k)
    assert len(modulus) == k + 1
    assert modulus[-1] == 1
    assert sympy.Poly(list(reversed(modulus)), t, modulus=p).is_irreducible


def test_explicit_modulus_is_validated() -> None:
    with pytest.raises(FieldError):
        make_field("extension", 2, 2, modulus=[1, 0, 1])
    with pytest.raises(FieldError):
        make_field("extension", 3, 2, modulus=[1, 0, 2])
    field = make_field("extension", 3, 2, modulus=[2, 1, 1])
    assert field.modulus == (2, 1, 1)


@pytest.mark.parametrize(
    ("kind", "p", "k"),
    [("prime", 6, 1), ("prime", 1, 1), ("prime", 7, 2), ("extension", 7, 1), ("extension", 2, 0), ("extension", 2, 10**9)],
)
def test_make_field_rejects(kind: str, p: int, k: int) -> None:
    with pytest.raises(FieldError):
        make_field(kind, p, k)


def test_arith_and_power(gf7) -> None:
    a, b = gf7.elem(3), gf7.elem(5)
    assert arith(a, b, "add").value == 1
    assert arith(a, b, "sub").value == 5
    assert arith(a, b, "mul").value == 1
    assert arith(a, b, "div").value == 2
    assert power(gf7.elem(0), 0).value == 1
    assert (a * 2 + 1).value == 0


def test_arith_errors(gf7, gf3) -> None:
    with pytest.raises(FieldMismatchError):
        arith(gf7.elem(1), gf3.elem(1), "add")
    with pytest.raises(FieldDivisionError):
        arith(gf7.elem(1), gf7.elem(0), "div")
    with pytest.raises(ZeroDivisionError):
        gf7.elem(1) / 0
    with pytest.raises(FieldMismatchError):
        gf7.elem(1.5)


def test_rationals() -> None:
    half = QQ.elem(Fraction(1, 2))
    assert (half + half).value == 1
    assert parse_elem(QQ, "-3/4").value == Fraction(-3, 4)
    assert serialize_elem(QQ.elem(Fraction(-3, 4))) == "-3/4"
    assert QQ.q is None and not QQ.is_finite
    with pytest.raises(FieldError):
        list(QQ.elements())
    with pytest.raises(FieldError):
        make_field("prime", 7).from_fraction(Fraction(1, 2))


def test_extension_text(gf4) -> None:
    for a in gf4.elements():
        assert gf4.parse(gf4.format(a)) == a
    with pytest.raises(FieldError):
        gf4.parse("x+1")


def test_elements_sorted_by_sort_key(gf4) -> None:
    elements = list(gf4.elements())
    assert elements == sorted(elements, key=gf4.sort_key)
    assert elements[0] == gf4.zero


def _fields_up_to(limit: int):
    fields = []
    for p in sympy.primerange(2, limit + 1):
        fields.append(make_field("prime", p))
        k = 2
        while p**k <= limit:
            fields.append(make_field("extension", p, k))
            k += 1
    return fields


FIELDS_TO_64 = _fields_up_to(64)
FIELDS_TO_9 = _fields_up_to(9)


def test_fields_to_64_cover_every_prime_power() -> None:
    orders = sorted(field.q for field in FIELDS_TO_64)
    assert orders == [q for q in range(2, 65) if len(sympy.factorint(q)) == 1]


@pytest.mark.parametrize("field", FIELDS_TO_64, ids=str)
def test_fermat_little_theorem(field) -> None:
    for a in field.elements():
        if field.is_zero(a):
            assert field.pow(a, field.q - 1) == field.zero
        else:
            assert field.pow(a, field.q - 1) == field.one
            assert field.pow(a, field.q) == a


@pytest.mark.parametrize("field", FIELDS_TO_64, ids=str)
def test_text_round_trip_all_elements(field) -> None:
    for a in field.elements():
        text = field.format(a)
        assert field.parse(text) == a
        assert serialize_elem(parse_elem(field, text)) == text


@pytest.mark.parametrize("field", FIELDS_TO_9, ids=str)
def test_field_axioms(field) -> None:
    elements = list(field.elements())
    zero, one = field.zero, field.one
    for a in elements:
        assert field.add(a, zero) == a
        assert field.mul(a, one) == a
        assert field.add(a, field.neg(a)) == zero
        if not field.is_zero(a):
            assert field.mul(a, field.inv(a)) == one
        for b in elements:
            assert field.add(a, b) == field.add(b, a)
            assert field.mul(a, b) == field.mul(b, a)
            assert field.sub(field.add(a, b), b) == a
            for c in elements:
                assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
                assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
                assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))


@pytest.mark.parametrize("text", ["2*", "*t", "*", "t*", "2*+1"])
def test_extension_parse_rejects_dangling_star(gf4, text: str) -> None:
    with pytest.raises(FieldError):
        gf4.parse(text)


def test_extension_parse_accepts_coefficient_star_t() -> None:
    gf9 = make_field("extension", 3, 2)
    assert gf9.parse("2*t+1") == (1, 2)
    assert gf9.format((1, 2)) == "2*t+1"


def test_sort_key_is_lexicographic_on_text() -> None:
    gf11 = make_field("prime", 11)
    assert sorted(range(11), key=gf11.sort_key) == [0, 1, 10, 2, 3, 4, 5, 6, 7, 8, 9]
    values = [Fraction(1, 2), Fraction(-1), Fraction(10), Fraction(2)]
    assert sorted(values, key=QQ.sort_key) == [Fraction(-1), Fraction(1, 2), Fraction(10), Fraction(2)]
