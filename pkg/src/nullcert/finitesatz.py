#!/usr/bin/env python3

"""Certificates over arbitrary exact fields and finite evaluation sets.

Each generator is replaced by its non-vanishing indicator on X,
``hatP = C_Y ∘ P`` with ``Y = P(X)``, and the F^n telescoping chain is
rebuilt from those indicators.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from .certgen import Certificate, PolySystem, check_containment, scaled_degree
from .errors import InvalidSystemError, NotApplicableError, PolynomialError
from .fields import FieldDesc, FieldElem
from .log.logger import get_logger, run_step
from .mpoly import (
    DEFAULT_ENUM_CAP,
    NEG_INF,
    Degree,
    EvalSet,
    MultiPoly,
    compose_univariate,
    normal_form,
    total_degree,
)


_LOG = get_logger("finitesatz")


def _raw_values(Y: Sequence[Any], field: Optional[FieldDesc]) -> Tuple[FieldDesc, List[Any]]:
    if field is None:
        elems = [y for y in Y if isinstance(y, FieldElem)]
        if not elems:
            raise PolynomialError("field is required when Y holds raw values or is empty")
        field = elems[0].field
    values = []
    for y in Y:
        if isinstance(y, FieldElem):
            if y.field != field:
                raise PolynomialError(f"{y.field} element in a {field} value set")
            y = y.value
        values.append(field.canonical(y))
    return field, values


def _sorted_distinct(field: FieldDesc, values: Sequence[Any]) -> Tuple[Any, ...]:
    return tuple(sorted(set(values), key=field.sort_key))


def image(P: MultiPoly, X: EvalSet, cap: int = DEFAULT_ENUM_CAP) -> List[FieldElem]:
    """``P(X)`` as distinct elements in canonical order.

    Raises:
        EnumerationCapError: X is infinite or larger than ``cap``.
    """
    field = P.field
    values = _sorted_distinct(field, [P(point) for point in X.iter_points(cap)])
    return [FieldElem(field, v) for v in values]


def build_CY(Y: Sequence[Any], field: Optional[FieldDesc] = None) -> MultiPoly:
    """``C_Y(x) = 1 - Π_{y∈Y\\0}(y - x) / Π_{y∈Y\\0} y``.

    ``C_Y(0) = 0`` and ``C_Y(y) = 1`` for every nonzero ``y`` in ``Y``.

    Raises:
        PolynomialError: ``Y`` is empty.
    """
    field, values = _raw_values(Y, field)
    if not values:
        raise PolynomialError("C_Y needs a nonempty value set")
    one = MultiPoly.one(field, 1)
    x = MultiPoly.variable(field, 1, 0)
    num = one
    den = field.one
    for y in _sorted_distinct(field, values):
        if field.is_zero(y):
            continue
        num = num * (MultiPoly.constant(field, 1, y) - x)
        den = field.mul(den, y)
    return one - num.scale(field.inv(den))


def _cy_over_x(cy: MultiPoly) -> MultiPoly:
    """Exact ``C_Y(x) / x``; relies on ``C_Y(0) = 0``."""
    if not cy.field.is_zero(cy.coefficient((0,))):
        raise NotApplicableError("C_Y has a constant term; division by x is not exact")
    return MultiPoly(cy.field, 1, {(e - 1,): c for (e,), c in cy.terms.items()})


def build_hatP(P: MultiPoly, imageY: Sequence[Any]) -> MultiPoly:
    """``C_Y ∘ P``: the 0/1 non-vanishing indicator of ``P`` on X.

    Raises:
        NotApplicableError: ``0`` is not in ``imageY``.
    """
    field, values = _raw_values(imageY, P.field)
    if not any(field.is_zero(v) for v in values):
        raise NotApplicableError("0 is not in the image; use the disjoint-zero branch")
    return compose_univariate(build_CY(values, field), P)


def inverse_interpolant(imageY: Sequence[Any], field: Optional[FieldDesc] = None) -> MultiPoly:
    """Lagrange interpolant of ``y -> 1/y`` on ``imageY``.

    Raises:
        NotApplicableError: ``0`` is in ``imageY``.
        PolynomialError: ``imageY`` is empty.
    """
    field, values = _raw_values(imageY, field)
    if not values:
        raise PolynomialError("interpolation needs at least one value")
    if any(field.is_zero(v) for v in values):
        raise NotApplicableError("1/x is undefined at 0")
    nodes = _sorted_distinct(field, values)
    x = MultiPoly.variable(field, 1, 0)
    result = MultiPoly.zero(field, 1)
    for j, yj in enumerate(nodes):
        basis = MultiPoly.one(field, 1)
        den = field.one
        for k, yk in enumerate(nodes):
            if k == j:
                continue
            basis = basis * (x - MultiPoly.constant(field, 1, yk))
            den = field.mul(den, field.sub(yj, yk))
        result = result + basis.scale(field.inv(field.mul(den, yj)))
    return result


@dataclass(frozen=True)
class ImageTable:
    """Per-generator images ``P_i(X)`` as sorted raw values."""

    field: FieldDesc
    images: Tuple[Tuple[Any, ...], ...]

    @property
    def F_bound(self) -> int:
        return max(len(img) for img in self.images)

    @property
    def contains_zero(self) -> Tuple[bool, ...]:
        return tuple(any(self.field.is_zero(v) for v in img) for img in self.images)

    def as_elements(self, i: int) -> List[FieldElem]:
        return [FieldElem(self.field, v) for v in self.images[i]]


def image_table(system: PolySystem, cap: int = DEFAULT_ENUM_CAP) -> ImageTable:
    """Images of every generator, computed on X or taken from the system.

    When X is enumerable the images are computed; user-supplied images must
    then cover them. Otherwise the supplied images are used as given.

    Raises:
        InvalidSystemError: X is infinite and no images were supplied, a
            supplied image is empty, or it misses a computed value.
    """
    field = system.field
    supplied = None
    if system.images is not None:
        supplied = []
        for i, img in enumerate(system.images, start=1):
            _, values = _raw_values(img, field)
            if not values:
                raise InvalidSystemError(f"image of P{i} is empty")
            supplied.append(_sorted_distinct(field, values))

    if system.X.is_enumerable(cap):
        computed = tuple(
            _sorted_distinct(field, [p(point) for point in system.X.iter_points(cap)]) for p in system.P
        )
        if supplied is not None:
            for i, (given, actual) in enumerate(zip(supplied, computed), start=1):
                missing = set(actual) - set(given)
                if missing:
                    raise InvalidSystemError(f"supplied image of P{i} misses {len(missing)} value(s)")
            return ImageTable(field, tuple(supplied))
        return ImageTable(field, computed)

    if supplied is None:
        raise InvalidSystemError("X is not enumerable and no images were supplied")
    _LOG.info("using supplied images; X is not enumerable")
    return ImageTable(field, tuple(supplied))


def indicator_polys(system: PolySystem, table: ImageTable) -> List[MultiPoly]:
    """``hatP_j = C_{Y_j ∪ {0}} ∘ P_j`` for every generator."""
    field = system.field
    return [
        compose_univariate(build_CY((*img, field.zero), field), p)
        for img, p in zip(table.images, system.P)
    ]


def t2_indicator_factors(system: PolySystem, table: ImageTable) -> List[MultiPoly]:
    """``I_i = (C_{Y_i} / x)(P_i) · Π_{j>i} (1 - hatP_j)``.

    ``0`` is added to every image so the division by ``x`` is exact; the
    products ``I_i P_i`` then telescope to ``1 - Π_j (1 - hatP_j)``.
    """
    field = system.field
    one = MultiPoly.one(field, system.nvars)
    hats = indicator_polys(system, table)
    factors: List[MultiPoly] = []
    tail = one
    for i in range(system.m - 1, -1, -1):
        cy = build_CY((*table.images[i], field.zero), field)
        factors.append(compose_univariate(_cy_over_x(cy), system.P[i]) * tail)
        tail = tail * (one - hats[i])
    factors.reverse()
    return factors


def nonmember_indicator_t2(system: PolySystem, table: ImageTable) -> MultiPoly:
    """``1 - Π_j (1 - hatP_j)``, equal to ``[x ∉ Z(P)]`` on X."""
    one = MultiPoly.one(system.field, system.nvars)
    prod = one
    for hat in indicator_polys(system, table):
        prod = prod * (one - hat)
    return one - prod


def t2_claimed_bound(m: int, d: Degree, F: int) -> Degree:
    """``m·d·(F-1)`` for ``m >= 2`` (at least ``d·F``), ``m·d·F`` for ``m = 1``."""
    if m == 1:
        return d * F
    return max(m * d * (F - 1), d * F)


def certify_t2(
    system: PolySystem,
    images: Optional[ImageTable] = None,
    *,
    check: bool = True,
    cap: int = DEFAULT_ENUM_CAP,
) -> Certificate:
    """Certificate ``Q ≡_X Σ R_i P_i`` over any exact field.

    Args:
        system: The system; X must be nonempty.
        images: Precomputed images; computed from the system when omitted.
        check: Verify ``Z(P) ∩ X ⊆ Z(Q)`` on X (or the sample) first.
        cap: Enumeration cap.

    Returns:
        Certificate: ``mode`` is ``theorem2``.

    Raises:
        InvalidSystemError: X is empty, or infinite without images.
        ContainmentError: Containment fails at a checked point.
    """
    if system.X.points is not None and not system.X.points:
        raise InvalidSystemError("the evaluation set X is empty")
    task_id = uuid.uuid4().hex[:8]
    table = images if images is not None else run_step(f"{task_id} image_table", image_table, system, cap)
    if len(table.images) != system.m:
        raise InvalidSystemError("one image per generator is required")

    warnings: List[str] = []
    checked = False
    if check:
        checked = run_step(f"{task_id} containment", check_containment, system, cap)
        if not checked:
            warnings.append("containment assumed, not checked")
    else:
        warnings.append("containment check disabled")
        _LOG.warning("containment check disabled; certificate relies on the caller")

    field, m, d = system.field, system.m, system.d
    F = table.F_bound
    sizes = [len(img) for img in table.images]
    degs = [total_degree(p) for p in system.P]
    deg_q = total_degree(system.Q)
    zero = MultiPoly.zero(field, system.nvars)

    disjoint = [i for i, has_zero in enumerate(table.contains_zero) if not has_zero]
    if disjoint:
        i = disjoint[0]
        _LOG.debug(f"disjoint-zero branch on P{i + 1}")
        inv = inverse_interpolant(table.images[i], field)
        R = [zero] * m
        R[i] = system.Q * compose_univariate(inv, system.P[i])
        refined = [NEG_INF] * m
        refined[i] = deg_q + scaled_degree(degs[i], sizes[i] - 1)
    else:
        factors = run_step(f"{task_id} t2_indicator_factors", t2_indicator_factors, system, table)
        R = [system.Q * factor for factor in factors]
        refined = []
        for i in range(m):
            if sizes[i] == 1:
                refined.append(NEG_INF)
                continue
            tail = sum(scaled_degree(max(degs[j], 0), sizes[j] - 1) for j in range(i + 1, m))
            refined.append(deg_q + scaled_degree(degs[i], sizes[i] - 2) + tail)

    return Certificate(
        R=tuple(R),
        claimed_bound=t2_claimed_bound(m, d, F),
        mode="theorem2",
        reduced_R=tuple(normal_form(r) for r in R) if field.is_finite else None,
        refined_bounds=tuple(refined),
        trivial_bound=system.nvars * (field.q - 1) if field.is_finite else None,
        containment_checked=checked,
        warnings=tuple(warnings),
    )
