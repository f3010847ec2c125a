#!/usr/bin/env python3

"""Finite-field Nullstellensatz certificates (``Q ≡ Σ R_i P_i`` on F^n).

Construction: ``I_i = P_i^(q-2) · Π_{j>i} (1 - P_j^(q-1))`` and
``R_i = Q · I_i``. The factors telescope exactly to
``Σ I_i P_i = 1 - Π_j (1 - P_j^(q-1))``, which is ``[x ∉ Z(P)]`` on F^n.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field as dc_field
from typing import Any, List, Optional, Sequence, Tuple

from .errors import (
    ContainmentError,
    EnumerationCapError,
    InconsistencyError,
    InvalidSystemError,
    NotApplicableError,
    PolynomialError,
)
from .fields import FieldDesc
from .log.logger import get_logger, run_step
from .mpoly import (
    DEFAULT_ENUM_CAP,
    NEG_INF,
    Degree,
    EvalSet,
    MultiPoly,
    Point,
    normal_form,
    total_degree,
)


_LOG = get_logger("certgen")

CertMode = str  # theorem1 | theorem1-weak | theorem2 | oracle


@dataclass(frozen=True)
class PolySystem:
    """Input instance: generators ``P``, target ``Q`` and evaluation set ``X``.

    Attributes:
        field: Coefficient field.
        nvars: Number of variables.
        P: Generators ``P_1..P_m`` (``m >= 1``).
        Q: Target polynomial.
        X: Evaluation set; defaults to all of F^n.
        var_names: Variable names used for printing.
        images: Optional user-supplied images ``P_i(X)`` (construction-only
            mode for infinite ``X``).
        sample: Optional finite verification sample when ``X`` is infinite.
    """

    field: FieldDesc
    nvars: int
    P: Tuple[MultiPoly, ...]
    Q: MultiPoly
    X: Optional[EvalSet] = None
    var_names: Tuple[str, ...] = ()
    images: Optional[Tuple[Tuple[Any, ...], ...]] = None
    sample: Optional[Tuple[Point, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "P", tuple(self.P))
        if not self.P:
            raise InvalidSystemError("a system needs at least one generator P")
        for poly in (*self.P, self.Q):
            if poly.field != self.field or poly.nvars != self.nvars:
                raise InvalidSystemError("all polynomials must share field and nvars")
        if self.X is None:
            object.__setattr__(self, "X", EvalSet.all(self.field, self.nvars))
        elif self.X.field != self.field or self.X.nvars != self.nvars:
            raise InvalidSystemError("evaluation set does not match the system")
        if not self.var_names:
            object.__setattr__(self, "var_names", tuple(f"x{i + 1}" for i in range(self.nvars)))
        elif len(self.var_names) != self.nvars:
            raise InvalidSystemError("var_names length differs from nvars")
        if self.images is not None and len(self.images) != len(self.P):
            raise InvalidSystemError("one image per generator is required")
        if self.d == NEG_INF:
            raise InvalidSystemError("the all-zero system is rejected")

    @property
    def m(self) -> int:
        return len(self.P)

    @property
    def d(self) -> Degree:
        return max(total_degree(poly) for poly in (*self.P, self.Q))

    def check_points(self, cap: int = DEFAULT_ENUM_CAP) -> Optional[Tuple[Point, ...]]:
        """Points usable for checks: X when enumerable, else the sample."""
        if self.X.is_enumerable(cap):
            return tuple(self.X.iter_points(cap))
        if self.sample is not None:
            return self.sample
        return None


@dataclass(frozen=True)
class Certificate:
    """Cofactors ``R_1..R_m`` with their degree audit."""

    R: Tuple[MultiPoly, ...]
    claimed_bound: Degree
    mode: CertMode
    reduced_R: Optional[Tuple[MultiPoly, ...]] = None
    refined_bounds: Optional[Tuple[Degree, ...]] = None
    trivial_bound: Optional[int] = None
    containment_checked: bool = True
    warnings: Tuple[str, ...] = ()

    @property
    def raw_degrees(self) -> Tuple[Degree, ...]:
        return tuple(total_degree(r) for r in self.R)

    @property
    def reduced_degrees(self) -> Optional[Tuple[Degree, ...]]:
        if self.reduced_R is None:
            return None
        return tuple(total_degree(r) for r in self.reduced_R)


@dataclass
class VerifyReport:
    """Outcome of :func:`verify`."""

    ok: bool
    reason: str
    raw_degrees: Tuple[Degree, ...]
    claimed_bound: Degree
    points_checked: int = 0
    witness: Optional[Point] = None
    details: List[str] = dc_field(default_factory=list)
    refined_bounds: Optional[Tuple[Degree, ...]] = None


def scaled_degree(deg: Degree, factor: int) -> Degree:
    """Degree of ``P^factor`` given ``deg(P)``; ``P^0 = 1`` even for ``P = 0``."""
    if factor == 0:
        return 0
    return deg * factor


def _require_finite(system: PolySystem) -> int:
    if not system.field.is_finite:
        raise NotApplicableError("the F^n construction needs a finite field")
    return system.field.q


def indicator_factors(system: PolySystem) -> List[MultiPoly]:
    """``I_i = P_i^(q-2) Π_{j>i} (1 - P_j^(q-1))``, unreduced."""
    q = _require_finite(system)
    one = MultiPoly.one(system.field, system.nvars)
    complements = [one - p ** (q - 1) for p in system.P]
    factors: List[MultiPoly] = []
    tail = one
    for i in range(system.m - 1, -1, -1):
        factors.append(system.P[i] ** (q - 2) * tail)
        tail = tail * complements[i]
    factors.reverse()
    return factors


def nonmember_indicator(system: PolySystem) -> MultiPoly:
    """``1 - Π_j (1 - P_j^(q-1))``, equal to ``[x ∉ Z(P)]`` on F^n."""
    q = _require_finite(system)
    one = MultiPoly.one(system.field, system.nvars)
    prod = one
    for p in system.P:
        prod = prod * (one - p ** (q - 1))
    return one - prod


def containment_witness(system: PolySystem, points: Sequence[Point]) -> Optional[Point]:
    """First point where every ``P_i`` vanishes but ``Q`` does not."""
    field = system.field
    for point in points:
        if all(field.is_zero(p(point)) for p in system.P) and not field.is_zero(system.Q(point)):
            return point
    return None


def check_containment(system: PolySystem, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Check ``Z(P) ∩ X ⊆ Z(Q)`` where checkable.

    Returns:
        bool: ``True`` when the check ran, ``False`` when X was too large and
        no sample was given.

    Raises:
        ContainmentError: A witness point was found.
    """
    points = system.check_points(cap)
    if points is None:
        _LOG.warning(f"containment not checked: |X|={system.X.size} exceeds cap {cap}")
        return False
    witness = containment_witness(system, points)
    if witness is not None:
        raise ContainmentError("Z(P) is not contained in Z(Q)", witness=witness)
    return True


def _is_constant_one(poly: MultiPoly) -> bool:
    return poly == MultiPoly.one(poly.field, poly.nvars)


def certify_t1(system: PolySystem, *, check: bool = True, cap: int = DEFAULT_ENUM_CAP) -> Certificate:
    """Certificate ``R_i = Q · I_i`` on all of F^n.

    Args:
        system: A system over a finite field.
        check: Verify ``Z(P) ⊆ Z(Q)`` exhaustively when X fits the cap.
        cap: Enumeration cap.

    Returns:
        Certificate: Raw and reduced cofactors with the degree audit.

    Raises:
        NotApplicableError: The field is QQ.
        ContainmentError: Containment fails at a checked point.
    """
    q = _require_finite(system)
    task_id = uuid.uuid4().hex[:8]
    warnings: List[str] = []
    checked = False
    if check:
        checked = run_step(f"{task_id} containment", check_containment, system, cap)
        if not checked:
            warnings.append("containment assumed, not checked")
    else:
        warnings.append("containment check disabled")
        _LOG.warning("containment check disabled; certificate relies on the caller")

    factors = run_step(f"{task_id} indicator_factors", indicator_factors, system)
    R = tuple(system.Q * factor for factor in factors)

    m, d = system.m, system.d
    weak = _is_constant_one(system.Q)
    claimed = m * d * (q - 1) - d if weak else m * d * (q - 1)

    degs = [total_degree(p) for p in system.P]
    deg_q = total_degree(system.Q)
    refined = tuple(
        deg_q + scaled_degree(degs[i], q - 2) + sum(scaled_degree(max(degs[j], 0), q - 1) for j in range(i + 1, m))
        for i in range(m)
    )
    return Certificate(
        R=R,
        claimed_bound=claimed,
        mode="theorem1-weak" if weak else "theorem1",
        reduced_R=tuple(normal_form(r) for r in R),
        refined_bounds=refined,
        trivial_bound=system.nvars * (q - 1),
        containment_checked=checked,
        warnings=tuple(warnings),
    )


def verify(system: PolySystem, cert: Certificate, cap: int = DEFAULT_ENUM_CAP) -> VerifyReport:
    """Check ``Q ≡_X Σ R_i P_i`` and ``deg(R_i) <= claimed_bound``.

    X is walked exhaustively when it fits ``cap``; otherwise the system's
    sample is used.

    Raises:
        EnumerationCapError: X is too large and no sample is available.
        PolynomialError: Certificate shape does not match the system.
    """
    if len(cert.R) != system.m:
        raise PolynomialError(f"certificate has {len(cert.R)} cofactors, system has {system.m} generators")
    for r in cert.R:
        if r.field != system.field or r.nvars != system.nvars:
            raise PolynomialError("cofactor field or nvars does not match the system")

    degrees = cert.raw_degrees
    over = [i + 1 for i, deg in enumerate(degrees) if deg > cert.claimed_bound]
    if over:
        return VerifyReport(
            ok=False,
            reason=f"degree bound violated by R{', R'.join(map(str, over))}",
            raw_degrees=degrees,
            claimed_bound=cert.claimed_bound,
            refined_bounds=cert.refined_bounds,
        )

    points = system.check_points(cap)
    if points is None:
        raise EnumerationCapError(system.X.size, cap)

    combo = MultiPoly.zero(system.field, system.nvars)
    for r, p in zip(cert.R, system.P):
        combo = combo + r * p
    diff = system.Q - combo
    field = system.field
    witness = next((pt for pt in points if not field.is_zero(diff(pt))), None)
    details = []
    if system.X.is_all and field.is_finite and system.X.is_enumerable(cap):
        details.append("normal form cross-check ran")
        if normal_form(diff).is_zero() != (witness is None):
            raise InconsistencyError("pointwise verification disagrees with normal form")
    elif not system.X.is_enumerable(cap):
        details.append(f"checked on a sample of {len(points)} points only")

    if witness is not None:
        return VerifyReport(
            ok=False,
            reason="Q differs from sum R_i P_i",
            raw_degrees=degrees,
            claimed_bound=cert.claimed_bound,
            refined_bounds=cert.refined_bounds,
            points_checked=len(points),
            witness=witness,
            details=details,
        )
    return VerifyReport(
        ok=True,
        reason="ok",
        raw_degrees=degrees,
        claimed_bound=cert.claimed_bound,
        points_checked=len(points),
        details=details,
    )
