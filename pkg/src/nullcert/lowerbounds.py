#!/usr/bin/env python3

"""Sharpness demos for the degree bounds.

- field size: ``P = x^2 + 1`` over GF(q), ``q = p^k``, ``p ≡ 3 (mod 4)``, ``k`` odd
- degree: ``P = H^2 + 1`` with ``H`` elementary symmetric of degree ``k``
- interpolation: ``P = x^2``, ``Q = x`` on ``X = {-F..-1, 1..F}`` over QQ
"""

from __future__ import annotations

import math
import uuid
from dataclasses import asdict, dataclass, field as dc_field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from sympy import factorint, isprime

from .certgen import PolySystem
from .errors import EnumerationCapError, FieldError, InconsistencyError, NotApplicableError
from .fields import QQ, FieldDesc, make_field
from .finitesatz import inverse_interpolant
from .log.logger import get_logger, run_step
from .mpoly import DEFAULT_ENUM_CAP, EvalSet, MultiPoly, elementary_symmetric, normal_form, total_degree
from .oracle import min_degree


_LOG = get_logger("lowerbounds")

ORACLE_FIELD_LIMIT = 343
EXHAUSTIVE_ROOT_LIMIT = 4096


@dataclass
class LowerBoundReport:
    """Outcome of one sharpness demo; unset fields are left ``None``."""

    instance: str
    claimed_lower_bound: Optional[int] = None
    q: Optional[int] = None
    p: Optional[int] = None
    k: Optional[int] = None
    t: Optional[int] = None
    b: Optional[int] = None
    digits_t: Optional[List[int]] = None
    digits_b: Optional[List[int]] = None
    normal_form_degree: Optional[int] = None
    leading_coefficient: Optional[str] = None
    lucas_nonzero: Optional[bool] = None
    construction_degree: Optional[int] = None
    oracle_min_degree: Optional[int] = None
    closed_form: Optional[Fraction] = None
    lagrange_coefficient: Optional[Fraction] = None
    notes: List[str] = dc_field(default_factory=list)

    def to_record(self) -> Dict[str, Any]:
        """Flat ``key -> value`` mapping of the fields that are set."""
        record: Dict[str, Any] = {}
        for key, value in asdict(self).items():
            if value is None or value == []:
                continue
            if isinstance(value, list) and key != "notes":
                value = ",".join(str(v) for v in value)
            elif isinstance(value, Fraction):
                value = str(value)
            elif key == "notes":
                value = "; ".join(value)
            record[key] = value
        return record


def prime_power(q: int) -> Tuple[int, int]:
    """Split ``q = p^k``.

    Raises:
        FieldError: ``q`` is not a prime power.
    """
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise FieldError(f"q={q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise FieldError(f"q={q} is not a prime power")
    (p, k), = factors.items()
    return int(p), int(k)


def field_for_order(q: int) -> FieldDesc:
    p, k = prime_power(q)
    if k == 1:
        return make_field("prime", p)
    return make_field("extension", p, k)


def base_p_digits(n: int, p: int) -> List[int]:
    """Base-``p`` digits of ``n``, least significant first (``[0]`` for ``n = 0``)."""
    if n < 0:
        raise NotApplicableError("digits of a negative number")
    if p < 2:
        raise FieldError(f"base {p} must be >= 2")
    digits = []
    while True:
        n, r = divmod(n, p)
        digits.append(r)
        if not n:
            return digits


def lucas_nonzero(n: int, m: int, p: int) -> bool:
    """Whether ``binom(n, m) mod p != 0``, by comparing base-``p`` digits.

    Raises:
        NotApplicableError: ``m`` is outside ``[0, n]``.
        FieldError: ``p`` is not prime.
    """
    if not isprime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 0 or m > n:
        raise NotApplicableError(f"Lucas test needs 0 <= m <= n, got n={n} m={m}")
    dn = base_p_digits(n, p)
    dm = base_p_digits(m, p)
    dm += [0] * (len(dn) - len(dm))
    return all(a <= b for a, b in zip(dm, dn))


def _has_no_root_by_theory(p: int, k: int) -> bool:
    return p % 4 == 3 and k % 2 == 1


def euler_no_root_check(q: int) -> bool:
    """Whether ``x^2 + 1`` has no root in GF(q).

    Exhaustive for ``q <= 4096`` and cross-checked against the residue rule
    (no root exactly when ``p ≡ 3 (mod 4)`` and ``k`` is odd).

    Raises:
        FieldError: ``q`` is not a prime power.
        InconsistencyError: Search and rule disagree.
    """
    p, k = prime_power(q)
    expected = _has_no_root_by_theory(p, k)
    if q > EXHAUSTIVE_ROOT_LIMIT:
        return expected
    field = field_for_order(q)
    one = field.one
    found = any(field.is_zero(field.add(field.mul(a, a), one)) for a in field.elements())
    if found == expected:
        raise InconsistencyError(f"root search and residue rule disagree for q={q}")
    return not found


def _require_field_size_instance(q: int) -> Tuple[int, int]:
    p, k = prime_power(q)
    if not _has_no_root_by_theory(p, k):
        raise NotApplicableError(f"q={q} needs p ≡ 3 (mod 4) and odd k")
    return p, k


def _x2_plus_1(field: FieldDesc, nvars: int, base: Optional[MultiPoly] = None) -> MultiPoly:
    h = base if base is not None else MultiPoly.variable(field, nvars, 0)
    return h * h + 1


def demo_field_size(q: int, run_oracle: bool = False, cap: int = DEFAULT_ENUM_CAP) -> LowerBoundReport:
    """``x^2 + 1`` needs a cofactor of degree at least ``q - 1``.

    The unique reduced cofactor is ``normal_form(P^(q-2))``; its ``x^(q-1)``
    coefficient is ``binom(q-2, (q-1)/2) mod p``.

    Raises:
        NotApplicableError: ``q`` does not satisfy the residue condition.
        InconsistencyError: One of the internal cross-checks failed.
    """
    p, k = _require_field_size_instance(q)
    task_id = uuid.uuid4().hex[:8]
    field = field_for_order(q)
    P = _x2_plus_1(field, 1)
    R = run_step(f"{task_id} reduce_power", lambda: normal_form(P ** (q - 2)))

    t, b = q - 2, (q - 1) // 2
    degree = total_degree(R)
    top = R.coefficient((q - 1,))
    expected_top = field.from_int(math.comb(t, b) % p)
    if degree != q - 1 or top != expected_top:
        raise InconsistencyError(f"normal form of (x^2+1)^{t} has degree {degree}, top {field.format(top)}")
    verdict = lucas_nonzero(t, b, p)
    if not verdict:
        raise InconsistencyError("Lucas test says the top coefficient vanishes")

    report = LowerBoundReport(
        instance=f"P = x^2+1, Q = 1 over GF({q})",
        claimed_lower_bound=q - 1,
        q=q,
        p=p,
        k=k,
        t=t,
        b=b,
        digits_t=base_p_digits(t, p),
        digits_b=base_p_digits(b, p),
        normal_form_degree=int(degree),
        leading_coefficient=field.format(top),
        lucas_nonzero=verdict,
    )
    if run_oracle:
        if q > ORACLE_FIELD_LIMIT:
            report.notes.append(f"oracle skipped: q > {ORACLE_FIELD_LIMIT}")
        else:
            system = PolySystem(field, 1, (P,), MultiPoly.one(field, 1))
            sweep = run_step(f"{task_id} oracle", min_degree, system, q - 1, cap)
            if sweep.min_degree != q - 1:
                raise InconsistencyError(f"oracle minimal degree {sweep.min_degree} differs from {q - 1}")
            report.oracle_min_degree = sweep.min_degree
            report.construction_degree = sweep.construction_degree
    return report


def demo_degree(
    n: int,
    k: int,
    q: int,
    run_oracle: bool = False,
    *,
    dmax: Optional[int] = None,
    cap: int = DEFAULT_ENUM_CAP,
) -> LowerBoundReport:
    """``H^2 + 1`` needs a cofactor of degree at least ``k(q - 1)``.

    Args:
        n: Number of variables.
        k: Degree of the elementary symmetric polynomial ``H``.
        q: Field order with the residue condition of :func:`demo_field_size`.
        run_oracle: Sweep the oracle up to ``dmax`` (default ``n(q-1)``).
        dmax: Oracle sweep limit.
        cap: Enumeration cap for ``q^n``.

    Raises:
        NotApplicableError: Bad ``q`` or ``k`` outside ``[1, n]``.
        EnumerationCapError: ``run_oracle`` with ``q^n > cap``.
        InconsistencyError: The oracle found a certificate below the bound.
    """
    p, ext = _require_field_size_instance(q)
    if not 1 <= k <= n:
        raise NotApplicableError(f"need 1 <= k <= n, got n={n} k={k}")
    field = field_for_order(q)
    H = elementary_symmetric(field, n, k)
    P = _x2_plus_1(field, n, H)
    claimed = k * (q - 1)
    report = LowerBoundReport(
        instance=f"P = H^2+1, H = e_{k}(x1..x{n}), Q = 1 over GF({q})",
        claimed_lower_bound=claimed,
        q=q,
        p=p,
        k=ext,
    )
    if run_oracle:
        if q**n > cap:
            raise EnumerationCapError(q**n, cap)
        limit = n * (q - 1) if dmax is None else dmax
        system = PolySystem(field, n, (P,), MultiPoly.one(field, n))
        sweep = run_step(f"{uuid.uuid4().hex[:8]} oracle", min_degree, system, limit, cap)
        if sweep.min_degree is not None and sweep.min_degree < claimed:
            raise InconsistencyError(f"oracle found degree {sweep.min_degree} below {claimed}")
        report.oracle_min_degree = sweep.min_degree
        report.construction_degree = sweep.construction_degree
        if sweep.min_degree is None:
            report.notes.append(f"no certificate up to degree {limit}")
    return report


def _symmetric_nodes(F: int) -> List[int]:
    return [x for x in range(-F, F + 1) if x]


def interp_closed_form(F: int) -> Fraction:
    """``(-1)^(F+1) / (F!)^2``."""
    return Fraction((-1) ** (F + 1), math.factorial(F) ** 2)


def interp_lagrange_coefficient(F: int) -> Fraction:
    """Leading coefficient of the interpolant of ``1/x`` on ``{-F..-1, 1..F}``."""
    nodes = _symmetric_nodes(F)
    total = Fraction(0)
    for xj in nodes:
        den = 1
        for xk in nodes:
            if xk != xj:
                den *= xj - xk
        total += Fraction(1, xj * den)
    return total


def interp_leading_coeff(F: int) -> Fraction:
    """Leading coefficient of the degree ``2F - 1`` interpolant of ``1/x``.

    Raises:
        NotApplicableError: ``F < 1``.
        InconsistencyError: Closed form and interpolation disagree.
    """
    if F < 1:
        raise NotApplicableError(f"F must be >= 1, got {F}")
    closed = interp_closed_form(F)
    computed = interp_lagrange_coefficient(F)
    if closed != computed:
        raise InconsistencyError(f"closed form {closed} differs from Lagrange sum {computed}")
    return closed


def demo_interp(F: int, run_oracle: bool = False, cap: int = DEFAULT_ENUM_CAP) -> LowerBoundReport:
    """Interpolation example ``P = x^2``, ``Q = x`` on ``{-F..-1, 1..F}``.

    The cofactor must agree with ``1/x`` on X, so its degree is exactly
    ``2F - 1``.
    """
    coeff = interp_leading_coeff(F)
    nodes = [QQ.from_int(x) for x in _symmetric_nodes(F)]
    poly = inverse_interpolant(nodes, QQ)
    if total_degree(poly) != 2 * F - 1 or poly.coefficient((2 * F - 1,)) != coeff:
        raise InconsistencyError("inverse interpolant disagrees with the closed form")
    report = LowerBoundReport(
        instance=f"P = x^2, Q = x over QQ, X = {{-{F}..-1, 1..{F}}}",
        claimed_lower_bound=2 * F - 1,
        closed_form=coeff,
        lagrange_coefficient=interp_lagrange_coefficient(F),
    )
    if run_oracle:
        x = MultiPoly.variable(QQ, 1, 0)
        system = PolySystem(QQ, 1, (x * x,), x, X=EvalSet.explicit(QQ, 1, [(v,) for v in nodes]))
        sweep = run_step(f"{uuid.uuid4().hex[:8]} oracle", min_degree, system, 2 * F, cap)
        if sweep.min_degree != 2 * F - 1:
            raise InconsistencyError(f"oracle minimal degree {sweep.min_degree} differs from {2 * F - 1}")
        report.oracle_min_degree = sweep.min_degree
        report.construction_degree = sweep.construction_degree
    return report
