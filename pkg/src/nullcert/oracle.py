#!/usr/bin/env python3

"""Minimal-degree certificate oracle by exact linear algebra.

Unknowns are the coefficients of every ``R_i`` on the monomials of total
degree ``<= D``; each point of X contributes one equation
``Σ_i R_i(x) P_i(x) = Q(x)``.
"""

from __future__ import annotations

import itertools
import time
import uuid
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .certgen import Certificate, PolySystem, certify_t1
from .errors import ContainmentError, EnumerationCapError, InvalidSystemError, NotApplicableError, PolynomialError
from .fields import FieldDesc
from .finitesatz import certify_t2
from .log.logger import get_logger, log_step
from .mpoly import DEFAULT_ENUM_CAP, NEG_INF, Degree, Monomial, MultiPoly, grlex_key, normal_form


_LOG = get_logger("oracle")

Row = Dict[int, Any]


@dataclass
class MinDegReport:
    """Result of a degree sweep.

    Attributes:
        min_degree: Least ``D`` with a certificate, ``None`` when none exists
            up to ``dmax``.
        dmax: Sweep limit.
        witness: Certificate at ``min_degree``.
        construction_degree: Degree of the constructed certificate, ``None``
            when no construction applies.
        monomial_count: Unknowns in the last solved system.
        equation_count: Equations (points of X) in the last solved system.
    """

    min_degree: Optional[int]
    dmax: int
    witness: Optional[Certificate] = None
    construction_degree: Optional[Degree] = None
    monomial_count: int = 0
    equation_count: int = 0

    @property
    def found(self) -> bool:
        return self.min_degree is not None


def monomial_basis(nvars: int, D: int, per_var: Optional[int] = None) -> List[Monomial]:
    """Monomials of total degree ``<= D`` (each exponent ``<= per_var``), grlex ascending."""
    top = D if per_var is None else min(D, per_var)
    monos = [mono for mono in itertools.product(range(top + 1), repeat=nvars) if sum(mono) <= D]
    return sorted(monos, key=grlex_key)


def _reduce_row(field: FieldDesc, row: Row, pivots: Dict[int, Row]) -> Row:
    # pivot rows only hold columns right of their pivot, so ascending order is enough
    for pc in sorted(pivots):
        coeff = row.get(pc)
        if coeff is None:
            continue
        for c, v in pivots[pc].items():
            value = field.sub(row.get(c, field.zero), field.mul(coeff, v))
            if field.is_zero(value):
                row.pop(c, None)
            else:
                row[c] = value
    return row


def solve_sparse(field: FieldDesc, rows: Sequence[Row], ncols: int) -> Optional[List[Any]]:
    """Solve an augmented sparse system exactly; column ``ncols`` is the RHS.

    Pivot is the first nonzero column of each reduced row; free variables are
    set to zero.

    Returns:
        Optional[List[Any]]: A solution, or ``None`` when inconsistent.
    """
    pivots: Dict[int, Row] = {}
    for raw_row in rows:
        row = _reduce_row(field, dict(raw_row), pivots)
        if not row:
            continue
        pivot_col = min(row)
        if pivot_col == ncols:
            return None
        inv = field.inv(row[pivot_col])
        pivots[pivot_col] = {c: field.mul(v, inv) for c, v in row.items()}

    solution = [field.zero] * ncols
    for pc in sorted(pivots, reverse=True):
        row = pivots[pc]
        value = row.get(ncols, field.zero)
        for c, v in row.items():
            if c != pc and c != ncols:
                value = field.sub(value, field.mul(v, solution[c]))
        solution[pc] = value
    return solution


def _build_rows(system: PolySystem, basis: Sequence[Monomial], points: Sequence[Tuple[Any, ...]]) -> List[Row]:
    field = system.field
    ncols = system.m * len(basis)
    rows: List[Row] = []
    for point in points:
        powers = [[field.pow(c, e) for e in range(max((mono[i] for mono in basis), default=0) + 1)]
                  for i, c in enumerate(point)]
        mono_values = []
        for mono in basis:
            value = field.one
            for i, e in enumerate(mono):
                if e:
                    value = field.mul(value, powers[i][e])
            mono_values.append(value)
        row: Row = {}
        for i, p in enumerate(system.P):
            pv = p(point)
            if field.is_zero(pv):
                continue
            offset = i * len(basis)
            for j, mv in enumerate(mono_values):
                coeff = field.mul(pv, mv)
                if not field.is_zero(coeff):
                    row[offset + j] = coeff
        rhs = system.Q(point)
        if not field.is_zero(rhs):
            row[ncols] = rhs
        rows.append(row)
    return rows


def _points(system: PolySystem, cap: int) -> Tuple[Tuple[Any, ...], ...]:
    if system.m == 0:
        raise InvalidSystemError("the oracle needs at least one generator")
    return tuple(system.X.iter_points(cap))


def _solve_at(system: PolySystem, D: int, points: Sequence[Tuple[Any, ...]]) -> Tuple[Optional[Certificate], int]:
    field = system.field
    per_var = field.q - 1 if field.is_finite else None
    basis = monomial_basis(system.nvars, D, per_var)
    ncols = system.m * len(basis)
    solution = solve_sparse(field, _build_rows(system, basis, points), ncols)
    if solution is None:
        return None, ncols
    R = []
    for i in range(system.m):
        chunk = solution[i * len(basis):(i + 1) * len(basis)]
        R.append(MultiPoly(field, system.nvars, dict(zip(basis, chunk))))
    cert = Certificate(
        R=tuple(R),
        claimed_bound=D,
        mode="oracle",
        reduced_R=tuple(normal_form(r) for r in R) if field.is_finite else None,
        trivial_bound=system.nvars * (field.q - 1) if field.is_finite else None,
    )
    return cert, ncols


def certificate_at_degree(system: PolySystem, D: int, cap: int = DEFAULT_ENUM_CAP) -> Optional[Certificate]:
    """Certificate with every ``deg(R_i) <= D``, or ``None`` if none exists.

    Raises:
        EnumerationCapError: X is infinite or larger than ``cap``.
        PolynomialError: ``D`` is negative.
    """
    if D < 0:
        raise PolynomialError("degree D must be >= 0")
    cert, _ = _solve_at(system, D, _points(system, cap))
    return cert


def construction_degree(system: PolySystem, cap: int = DEFAULT_ENUM_CAP) -> Optional[Degree]:
    """Max cofactor degree of the constructed certificate.

    Reduced degrees are used over finite fields. ``None`` when no
    construction applies to the system.
    """
    try:
        if system.field.is_finite and system.X.is_all:
            cert = certify_t1(system, cap=cap)
        else:
            cert = certify_t2(system, cap=cap)
    except (ContainmentError, NotApplicableError, InvalidSystemError, EnumerationCapError) as exc:
        _LOG.debug(f"no construction for comparison: {exc}")
        return None
    degrees = cert.reduced_degrees if cert.reduced_degrees is not None else cert.raw_degrees
    return max(degrees, default=NEG_INF)


def min_degree(
    system: PolySystem,
    dmax: int,
    cap: int = DEFAULT_ENUM_CAP,
    *,
    compare: bool = True,
) -> MinDegReport:
    """Smallest ``D <= dmax`` admitting a certificate.

    Args:
        system: System with a finite X.
        dmax: Sweep limit.
        cap: Enumeration cap.
        compare: Also compute the construction degree.

    Returns:
        MinDegReport: ``min_degree`` is ``None`` when the sweep finds nothing.
    """
    if dmax < 0:
        raise PolynomialError("dmax must be >= 0")
    points = _points(system, cap)
    task_id = uuid.uuid4().hex[:8]
    report = MinDegReport(min_degree=None, dmax=dmax, equation_count=len(points))
    for D in range(dmax + 1):
        start = time.monotonic()
        cert, ncols = _solve_at(system, D, points)
        report.monomial_count = ncols
        log_step(task_id, f"degree={D}", "ok" if cert else "fail", int((time.monotonic() - start) * 1000))
        if cert is not None:
            report.min_degree = D
            report.witness = cert
            break
    if compare:
        report.construction_degree = construction_degree(system, cap)
    return report

