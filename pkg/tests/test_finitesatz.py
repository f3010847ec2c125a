#!/usr/bin/env python3

"""Tests for certificates over arbitrary fields and finite evaluation sets."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from nullcert.certgen import PolySystem, certify_t1, verify
from nullcert.errors import ContainmentError, InvalidSystemError, NotApplicableError, PolynomialError
from nullcert.fields import QQ, FieldElem, make_field
from nullcert.finitesatz import (
    ImageTable,
    build_CY,
    build_hatP,
    certify_t2,
    image,
    image_table,
    indicator_polys,
    inverse_interpolant,
    nonmember_indicator_t2,
    t2_claimed_bound,
    t2_indicator_factors,
)
from nullcert.mpoly import NEG_INF, EvalSet, MultiPoly, total_degree, zero_set

from conftest import suite_system, variables


def _qq_points(*coords):
    return EvalSet.explicit(QQ, len(coords[0]), [tuple(Fraction(c) for c in point) for point in coords])


def test_build_cy_is_nonzero_indicator() -> None:
    cy = build_CY([QQ.elem(0), QQ.elem(1), QQ.elem(2)])
    assert cy((Fraction(0),)) == 0
    assert cy((Fraction(1),)) == 1
    assert cy((Fraction(2),)) == 1
    assert total_degree(cy) == 2


def test_build_cy_needs_values() -> None:
    with pytest.raises(PolynomialError):
        build_CY([], QQ)
    with pytest.raises(PolynomialError):
        build_CY([1, 2])


def test_build_cy_without_nonzero_values(gf7) -> None:
    assert build_CY([0], gf7).is_zero()


def test_inverse_interpolant(gf7) -> None:
    poly = inverse_interpolant([1, 2, 3], gf7)
    for y in (1, 2, 3):
        assert gf7.mul(poly((y,)), y) == 1
    assert total_degree(poly) <= 2
    with pytest.raises(NotApplicableError):
        inverse_interpolant([0, 1], gf7)
    with pytest.raises(PolynomialError):
        inverse_interpolant([], gf7)


def test_build_hat_p(gf7) -> None:
    x, y = variables(gf7, 2)
    P = x - y
    X = EvalSet.explicit(gf7, 2, [(0, 0), (1, 0), (3, 1), (2, 2)])
    Y = image(P, X)
    assert [e.value for e in Y] == [0, 1, 2]
    hat = build_hatP(P, Y)
    for point in X.iter_points():
        assert hat(point) == (0 if P(point) == 0 else 1)
    with pytest.raises(NotApplicableError):
        build_hatP(P, [FieldElem(gf7, 1), FieldElem(gf7, 2)])


def test_image_orders_by_element_text() -> None:
    gf11 = make_field("prime", 11)
    (x,) = variables(gf11, 1)
    Y = image(x, EvalSet.all(gf11, 1))
    assert [gf11.format(e.value) for e in Y] == ["0", "1", "10", "2", "3", "4", "5", "6", "7", "8", "9"]


def test_interpolation_example_disjoint_branch() -> None:
    (x,) = variables(QQ, 1)
    X = _qq_points((-2,), (-1,), (1,), (2,))
    system = PolySystem(QQ, 1, (x * x,), x, X=X)
    cert = certify_t2(system)
    assert cert.mode == "theorem2"
    assert cert.R == (x.scale(Fraction(5, 4)) - (x**3).scale(Fraction(1, 4)),)
    assert cert.raw_degrees == (3,)
    assert cert.refined_bounds == (3,)
    assert cert.claimed_bound == 4
    assert cert.reduced_R is None and cert.trivial_bound is None
    assert verify(system, cert).ok


def _one(field, n):
    return MultiPoly.one(field, n)


def test_general_branch_over_rationals() -> None:
    x, y = variables(QQ, 2)
    X = _qq_points((0, 0), (0, 1), (1, 0), (1, 1), (2, 1))
    system = PolySystem(QQ, 2, (x, y), x * y, X=X)
    table = image_table(system)
    assert table.images == ((0, 1, 2), (0, 1))
    assert table.F_bound == 3
    cert = certify_t2(system)
    assert cert.refined_bounds == (4, 2)
    assert cert.claimed_bound == t2_claimed_bound(2, 2, 3) == 8
    for raw, refined in zip(cert.raw_degrees, cert.refined_bounds):
        assert raw <= refined
    assert verify(system, cert).ok


def test_telescoping_on_x() -> None:
    x, y = variables(QQ, 2)
    X = _qq_points((0, 0), (0, 3), (1, 0), (2, -1), (-1, 1))
    system = PolySystem(QQ, 2, (x * y, x - y), x * y + x - y, X=X)
    table = image_table(system)
    total = MultiPoly.zero(QQ, 2)
    for factor, p in zip(t2_indicator_factors(system, table), system.P):
        total = total + factor * p
    assert total == nonmember_indicator_t2(system, table)
    zeros = set(zero_set(system.P, X))
    for point in X.iter_points():
        assert total(point) == (0 if point in zeros else 1)


@pytest.mark.parametrize("p", [3, 5])
def test_agrees_with_finite_field_construction(p: int, contained_system) -> None:
    field = make_field("prime", p)
    system = contained_system(field, nvars=2, m=2)
    t1 = certify_t1(system)
    t2 = certify_t2(system)
    assert verify(system, t1).ok
    assert verify(system, t2).ok
    assert t2.reduced_R is not None
    assert t2.trivial_bound == 2 * (p - 1)


def test_subset_of_finite_field(gf7) -> None:
    x, y = variables(gf7, 2)
    X = EvalSet.explicit(gf7, 2, [(1, 2), (3, 3), (0, 5), (6, 1)])
    system = PolySystem(gf7, 2, (x - y, x), x * (x - y), X=X)
    cert = certify_t2(system)
    assert verify(system, cert).ok


def test_constant_image_is_skipped(gf7) -> None:
    x, y = variables(gf7, 2)
    X = EvalSet.explicit(gf7, 2, [(0, 1), (0, 2), (0, 3)])
    system = PolySystem(gf7, 2, (x, y - 1), x * y, X=X)
    cert = certify_t2(system)
    assert cert.refined_bounds[0] == NEG_INF
    assert cert.R[0].is_zero()
    assert not cert.R[1].is_zero()
    assert verify(system, cert).ok


def test_containment_failure() -> None:
    (x,) = variables(QQ, 1)
    system = PolySystem(QQ, 1, (x,), _one(QQ, 1), X=_qq_points((0,), (1,)))
    with pytest.raises(ContainmentError) as exc:
        certify_t2(system)
    assert exc.value.witness == (0,)


def test_empty_and_infinite_x() -> None:
    (x,) = variables(QQ, 1)
    with pytest.raises(InvalidSystemError):
        certify_t2(PolySystem(QQ, 1, (x,), x, X=EvalSet.explicit(QQ, 1, [])))
    with pytest.raises(InvalidSystemError):
        certify_t2(PolySystem(QQ, 1, (x,), x))


def test_supplied_images_for_infinite_x() -> None:
    (x,) = variables(QQ, 1)
    sample = ((Fraction(1),), (Fraction(-1),))
    system = PolySystem(QQ, 1, (x * x,), _one(QQ, 1), images=((1,),), sample=sample)
    cert = certify_t2(system)
    assert cert.R == (_one(QQ, 1),)
    assert cert.containment_checked
    assert verify(system, cert).ok


def test_supplied_images_must_cover(gf7) -> None:
    (x,) = variables(gf7, 1)
    X = EvalSet.explicit(gf7, 1, [(1,), (2,)])
    short = PolySystem(gf7, 1, (x,), x, X=X, images=((1,),))
    with pytest.raises(InvalidSystemError):
        image_table(short)
    wider = PolySystem(gf7, 1, (x,), x, X=X, images=((0, 1, 2, 3),))
    assert image_table(wider).images == ((0, 1, 2, 3),)


def test_image_table_properties(gf7) -> None:
    table = ImageTable(gf7, ((0, 1), (2, 3, 4)))
    assert table.F_bound == 3
    assert table.contains_zero == (True, False)
    assert [e.value for e in table.as_elements(1)] == [2, 3, 4]


def test_claimed_bound_single_generator() -> None:
    assert t2_claimed_bound(1, 2, 3) == 6
    assert t2_claimed_bound(2, 1, 2) == 2
    assert t2_claimed_bound(3, 2, 4) == 18


def _assert_t2_certificate(system: PolySystem) -> None:
    table = image_table(system)
    cert = certify_t2(system)
    assert verify(system, cert).ok
    m, d, F = system.m, system.d, table.F_bound
    assert cert.claimed_bound == t2_claimed_bound(m, d, F)
    for raw, refined in zip(cert.raw_degrees, cert.refined_bounds):
        assert raw <= refined <= cert.claimed_bound
        if m == 1:
            assert raw <= d * F
        elif F >= 2:
            assert raw <= m * d * (F - 1)

    one = MultiPoly.one(system.field, system.nvars)
    total = MultiPoly.zero(system.field, system.nvars)
    for factor, poly in zip(t2_indicator_factors(system, table), system.P):
        total = total + factor * poly
    prod = one
    for hat in indicator_polys(system, table):
        prod = prod * (one - hat)
    assert (total + prod - one).is_zero()


@pytest.mark.slow
def test_t2_random_sweep_rationals() -> None:
    rng = random.Random(7200)
    for _ in range(100):
        n = rng.randint(1, 2)
        grid = list(itertools.product(range(-3, 4), repeat=n))
        points = rng.sample(grid, rng.randint(1, 6))
        X = EvalSet.explicit(QQ, n, [tuple(Fraction(c) for c in point) for point in points])
        system = suite_system(rng, QQ, n, rng.randint(1, 3), rng.randint(1, 2), X=X)
        _assert_t2_certificate(system)


@pytest.mark.slow
def test_t2_random_sweep_gf5_subsets() -> None:
    gf5 = make_field("prime", 5)
    rng = random.Random(7205)
    for _ in range(100):
        n = rng.randint(1, 2)
        grid = list(itertools.product(range(5), repeat=n))
        X = EvalSet.explicit(gf5, n, rng.sample(grid, rng.randint(1, len(grid) - 1)))
        system = suite_system(rng, gf5, n, rng.randint(1, 3), rng.randint(1, 3), X=X)
        _assert_t2_certificate(system)
