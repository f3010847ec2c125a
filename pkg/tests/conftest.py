#!/usr/bin/env python3
"""
pytest 配置文件，定义测试用的 fixtures
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence

import pytest

from nullcert.certgen import PolySystem
from nullcert.fields import FieldDesc, make_field
from nullcert.mpoly import EvalSet, MultiPoly, zero_set


@pytest.fixture
def gf3() -> FieldDesc:
    """GF(3)"""
    return make_field("prime", 3)


@pytest.fixture
def gf7() -> FieldDesc:
    """GF(7)"""
    return make_field("prime", 7)


@pytest.fixture
def gf4() -> FieldDesc:
    """GF(4) = GF(2)[t]/(t^2+t+1)"""
    return make_field("extension", 2, 2)


@pytest.fixture
def rng() -> random.Random:
    """固定种子的随机数生成器"""
    return random.Random(20240611)


def variables(field: FieldDesc, nvars: int) -> Sequence[MultiPoly]:
    return [MultiPoly.variable(field, nvars, i) for i in range(nvars)]


def random_poly(rng: random.Random, field: FieldDesc, nvars: int, max_deg: int = 2, terms: int = 3) -> MultiPoly:
    """Random polynomial with small exponents; coefficients drawn from the field."""
    elements = list(field.elements())
    monos = {}
    for _ in range(terms):
        mono = tuple(rng.randint(0, max_deg) for _ in range(nvars))
        monos[mono] = rng.choice(elements)
    return MultiPoly(field, nvars, monos)


@pytest.fixture
def contained_system(rng: random.Random) -> Callable[..., PolySystem]:
    """Factory for random systems with ``Q`` in the ideal of ``P`` (so Z(P) ⊆ Z(Q))."""

    def build(field: FieldDesc, nvars: int = 2, m: int = 2) -> PolySystem:
        P = []
        while len(P) < m:
            p = random_poly(rng, field, nvars) + MultiPoly.variable(field, nvars, 0)
            if not p.is_zero():
                P.append(p)
        Q = MultiPoly.zero(field, nvars)
        for p in P:
            Q = Q + random_poly(rng, field, nvars, max_deg=1, terms=2) * p
        return PolySystem(field, nvars, tuple(P), Q)

    return build


def _coefficient(rng: random.Random, field: FieldDesc) -> Any:
    if not field.is_finite:
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    return rng.choice([a for a in field.elements() if not field.is_zero(a)])


def _monomial(rng: random.Random, nvars: int, degree: int) -> tuple:
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)


def bounded_poly(rng: random.Random, field: FieldDesc, nvars: int, degree: int, terms: int = 3) -> MultiPoly:
    """Random polynomial of total degree exactly ``degree``."""
    monos = {_monomial(rng, nvars, degree): _coefficient(rng, field)}
    for _ in range(terms - 1):
        mono = _monomial(rng, nvars, rng.randint(0, max(degree - 1, 0)))
        if mono not in monos:
            monos[mono] = _coefficient(rng, field)
    return MultiPoly(field, nvars, monos)


def suite_system(
    rng: random.Random,
    field: FieldDesc,
    nvars: int,
    m: int,
    d: int,
    X: Optional[EvalSet] = None,
) -> PolySystem:
    """Random system with ``Z(P) ∩ X ⊆ Z(Q)`` and every degree at most ``d``.

    ``Q = 1`` is drawn now and then when ``P`` has no zero on X; otherwise
    ``Q`` is a random polynomial vanishing on the zeros, falling back to a
    constant combination of the generators.
    """
    X = X if X is not None else EvalSet.all(field, nvars)
    P = tuple(bounded_poly(rng, field, nvars, rng.randint(1, d)) for _ in range(m))
    zeros = zero_set(P, X)
    if not zeros and rng.random() < 0.3:
        return PolySystem(field, nvars, P, MultiPoly.one(field, nvars), X=X)
    for _ in range(10):
        Q = bounded_poly(rng, field, nvars, rng.randint(0, d))
        if all(field.is_zero(Q(point)) for point in zeros):
            return PolySystem(field, nvars, P, Q, X=X)
    Q = MultiPoly.zero(field, nvars)
    for p in P:
        Q = Q + p.scale(_coefficient(rng, field))
    return PolySystem(field, nvars, P, Q, X=X)
