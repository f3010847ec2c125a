#!/usr/bin/env python3

"""Sparse multivariate polynomials over a :class:`~nullcert.fields.FieldDesc`.

A polynomial is a map ``Monomial -> nonzero raw coefficient`` where a
monomial is the exponent vector of length ``nvars``. Instances are treated
as immutable once built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import EnumerationCapError, FieldMismatchError, InconsistencyError, NotApplicableError, PolynomialError
from .fields import FieldDesc, FieldElem


Monomial = Tuple[int, ...]
Point = Tuple[Any, ...]
Degree = Union[int, float]

NEG_INF: float = float("-inf")
DEFAULT_ENUM_CAP = 10**6


def grlex_key(mono: Monomial) -> Tuple[int, Monomial]:
    """Graded-lex sort key; sort with ``reverse=True`` for leading term first."""
    return (sum(mono), mono)


class MultiPoly:
    """Sparse multivariate polynomial with canonical term map."""

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: FieldDesc, nvars: int, terms: Optional[Mapping[Monomial, Any]] = None) -> None:
        """
        初始化对象。

        Args:
            field: Coefficient field.
            nvars: Ambient number of variables.
            terms: Monomial to coefficient map; coefficients are canonicalized
                and zero coefficients dropped.
        """
        if nvars < 0:
            raise PolynomialError("nvars must be >= 0")
        clean: Dict[Monomial, Any] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise PolynomialError(f"monomial {mono} does not fit {nvars} variables")
            coeff = field.canonical(coeff)
            if not field.is_zero(coeff):
                clean[mono] = coeff
        self.field = field
        self.nvars = nvars
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, field: FieldDesc, nvars: int, terms: Dict[Monomial, Any]) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldDesc, nvars: int) -> "MultiPoly":
        return cls._trusted(field, nvars, {})

    @classmethod
    def constant(cls, field: FieldDesc, nvars: int, value: Any) -> "MultiPoly":
        if isinstance(value, FieldElem):
            value = value.value
        return cls(field, nvars, {(0,) * nvars: value})

    @classmethod
    def one(cls, field: FieldDesc, nvars: int) -> "MultiPoly":
        return cls._trusted(field, nvars, {(0,) * nvars: field.one})

    @classmethod
    def variable(cls, field: FieldDesc, nvars: int, index: int) -> "MultiPoly":
        if not 0 <= index < nvars:
            raise PolynomialError(f"variable index {index} out of range for {nvars} variables")
        mono = tuple(1 if i == index else 0 for i in range(nvars))
        return cls._trusted(field, nvars, {mono: field.one})

    # -- inspection -------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Any]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(mono) for mono in self._terms)

    def coefficient(self, mono: Monomial) -> Any:
        return self._terms.get(tuple(mono), self.field.zero)

    def sorted_terms(self) -> List[Tuple[Monomial, Any]]:
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------------

    def _check_peer(self, other: "MultiPoly") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        if other.nvars != self.nvars:
            raise PolynomialError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, MultiPoly):
            self._check_peer(other)
            return other
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return MultiPoly.constant(self.field, self.nvars, other.value)
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.constant(self.field, self.nvars, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            if mono in out:
                total = field.add(out[mono], coeff)
                if field.is_zero(total):
                    del out[mono]
                else:
                    out[mono] = total
            else:
                out[mono] = coeff
        return MultiPoly._trusted(field, self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        neg = self.field.neg
        return MultiPoly._trusted(self.field, self.nvars, {m: neg(c) for m, c in self._terms.items()})

    def __sub__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other: Any) -> "MultiPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return MultiPoly._trusted(self.field, self.nvars, _mul_terms(self.field, self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if not isinstance(e, int) or e < 0:
            raise PolynomialError("exponent must be a nonnegative integer")
        result = MultiPoly.one(self.field, self.nvars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: Any) -> "MultiPoly":
        field = self.field
        if field.is_zero(c):
            return MultiPoly.zero(field, self.nvars)
        return MultiPoly._trusted(field, self.nvars, {m: field.mul(v, c) for m, v in self._terms.items()})

    # -- evaluation -------------------------------------------------------------

    def __call__(self, point: Sequence[Any]) -> Any:
        """Evaluate at a point of raw field values; returns a raw value."""
        if len(point) != self.nvars:
            raise PolynomialError(f"point has {len(point)} coordinates, expected {self.nvars}")
        field = self.field
        cache: List[Dict[int, Any]] = [{} for _ in range(self.nvars)]
        total = field.zero
        for mono, coeff in self._terms.items():
            value = coeff
            for i, e in enumerate(mono):
                if e:
                    powers = cache[i]
                    if e not in powers:
                        powers[e] = field.pow(point[i], e)
                    value = field.mul(value, powers[e])
            total = field.add(total, value)
        return total

    # -- protocol -----------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)]
        from .sysio.render import format_poly  # local: sysio imports mpoly

        return f"MultiPoly({self.field}, {format_poly(self, names)!r})"


def _mul_terms(field: FieldDesc, a: Mapping[Monomial, Any], b: Mapping[Monomial, Any]) -> Dict[Monomial, Any]:
    if not a or not b:
        return {}
    acc: Dict[Monomial, Any] = {}
    if field.kind == "prime":
        # integer accumulation, one reduction at the end
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                mono = tuple(x + y for x, y in zip(m1, m2))
                acc[mono] = acc.get(mono, 0) + c1 * c2
        p = field.p
        return {m: c % p for m, c in acc.items() if c % p}
    zero = field.zero
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = tuple(x + y for x, y in zip(m1, m2))
            acc[mono] = field.add(acc.get(mono, zero), field.mul(c1, c2))
    return {m: c for m, c in acc.items() if not field.is_zero(c)}


# -- evaluation sets -------------------------------------------------------------


@dataclass(frozen=True)
class EvalSet:
    """Either all of F^n (``points is None``) or an explicit list of points."""

    field: FieldDesc
    nvars: int
    points: Optional[Tuple[Point, ...]] = None

    @classmethod
    def all(cls, field: FieldDesc, nvars: int) -> "EvalSet":
        return cls(field, nvars, None)

    @classmethod
    def explicit(cls, field: FieldDesc, nvars: int, points: Iterable[Sequence[Any]]) -> "EvalSet":
        seen = set()
        canon: List[Point] = []
        for point in points:
            if len(point) != nvars:
                raise PolynomialError(f"point {tuple(point)} does not have {nvars} coordinates")
            coords = tuple(field.canonical(c.value if isinstance(c, FieldElem) else c) for c in point)
            if coords in seen:
                raise PolynomialError(f"duplicate point {coords}")
            seen.add(coords)
            canon.append(coords)
        return cls(field, nvars, tuple(canon))

    @property
    def is_all(self) -> bool:
        return self.points is None

    @property
    def size(self) -> Degree:
        if self.points is not None:
            return len(self.points)
        if not self.field.is_finite:
            return float("inf")
        return self.field.q**self.nvars

    def is_enumerable(self, cap: int = DEFAULT_ENUM_CAP) -> bool:
        return self.size <= cap

    def iter_points(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Point]:
        """Yield points in canonical order.

        Raises:
            EnumerationCapError: The set is infinite or larger than ``cap``.
        """
        if self.size > cap:
            raise EnumerationCapError(self.size, cap)
        if self.points is not None:
            yield from self.points
            return
        yield from itertools.product(list(self.field.elements()), repeat=self.nvars)


# -- module operations -------------------------------------------------------------


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact ``a op b`` for ``op`` in ``add``, ``sub``, ``mul``."""
    a._check_peer(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def total_degree(a: MultiPoly) -> Degree:
    """Largest exponent sum; ``NEG_INF`` for the zero polynomial."""
    if a.is_zero():
        return NEG_INF
    return max(sum(mono) for mono in a.terms)


def evaluate(a: MultiPoly, point: Sequence[Any]) -> FieldElem:
    """Value of ``a`` at ``point`` (FieldElem or raw coordinates)."""
    if len(point) != a.nvars:
        raise PolynomialError(f"point has {len(point)} coordinates, expected {a.nvars}")
    coords = []
    for c in point:
        if isinstance(c, FieldElem):
            if c.field != a.field:
                raise FieldMismatchError(f"{c.field} vs {a.field}")
            coords.append(c.value)
        else:
            coords.append(a.field.canonical(c))
    return FieldElem(a.field, a(coords))


def _reduce_exponent(e: int, q: int) -> int:
    return ((e - 1) % (q - 1)) + 1 if e else 0


def normal_form(a: MultiPoly) -> MultiPoly:
    """Unique representative of ``a`` modulo ``x_i^q - x_i``.

    Every exponent ``e >= 1`` becomes ``((e - 1) mod (q - 1)) + 1`` so that
    ``x^(q-1)`` is kept apart from ``x^0``.

    Raises:
        NotApplicableError: ``a`` is over QQ.
    """
    field = a.field
    if not field.is_finite:
        raise NotApplicableError("normal form needs a finite field")
    q = field.q
    acc: Dict[Monomial, Any] = {}
    zero = field.zero
    for mono, coeff in a.terms.items():
        reduced = tuple(_reduce_exponent(e, q) for e in mono)
        acc[reduced] = field.add(acc.get(reduced, zero), coeff)
    return MultiPoly._trusted(field, a.nvars, {m: c for m, c in acc.items() if not field.is_zero(c)})


def compose_univariate(u: MultiPoly, inner: MultiPoly) -> MultiPoly:
    """``u(inner)`` by Horner's scheme; ``u`` must be univariate."""
    if u.nvars != 1:
        raise PolynomialError("outer polynomial must be univariate")
    if u.field != inner.field:
        raise FieldMismatchError(f"{u.field} vs {inner.field}")
    if u.is_zero():
        return MultiPoly.zero(inner.field, inner.nvars)
    top = int(total_degree(u))
    result = MultiPoly.zero(inner.field, inner.nvars)
    for deg in range(top, -1, -1):
        result = result * inner
        coeff = u.coefficient((deg,))
        if not u.field.is_zero(coeff):
            result = result + MultiPoly.constant(inner.field, inner.nvars, coeff)
    return result


def first_difference(a: MultiPoly, b: MultiPoly, X: EvalSet, cap: int = DEFAULT_ENUM_CAP) -> Optional[Point]:
    """First point of ``X`` where ``a`` and ``b`` differ, or ``None``."""
    a._check_peer(b)
    diff = a - b
    field = a.field
    for point in X.iter_points(cap):
        if not field.is_zero(diff(point)):
            return point
    return None


def func_equal(a: MultiPoly, b: MultiPoly, X: EvalSet, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether ``a`` and ``b`` agree on every point of ``X``.

    For ``X = all`` the pointwise verdict is cross-checked against the normal
    form of ``a - b``.

    Raises:
        EnumerationCapError: ``X`` is larger than ``cap``.
        InconsistencyError: Evaluation and normal form disagree.
    """
    pointwise = first_difference(a, b, X, cap) is None
    if X.is_all:
        symbolic = normal_form(a - b).is_zero()
        if symbolic != pointwise:
            raise InconsistencyError(
                f"pointwise check says {pointwise} but normal form says {symbolic}"
            )
    return pointwise


def zero_set(polys: Sequence[MultiPoly], X: EvalSet, cap: int = DEFAULT_ENUM_CAP) -> List[Point]:
    """Points of ``X`` where every polynomial in ``polys`` vanishes, sorted."""
    field = X.field
    for poly in polys:
        if poly.field != field:
            raise FieldMismatchError(f"{poly.field} vs {field}")
        if poly.nvars != X.nvars:
            raise PolynomialError(f"nvars mismatch: {poly.nvars} vs {X.nvars}")
    hits = [
        point
        for point in X.iter_points(cap)
        if all(field.is_zero(poly(point)) for poly in polys)
    ]
    return sorted(hits, key=lambda point: tuple(field.sort_key(c) for c in point))


def elementary_symmetric(field: FieldDesc, nvars: int, k: int) -> MultiPoly:
    """Sum over all ``k``-subsets ``I`` of ``prod_{i in I} x_i``."""
    if not 0 <= k <= nvars:
        raise PolynomialError(f"degree {k} out of range for {nvars} variables")
    terms = {}
    for subset in itertools.combinations(range(nvars), k):
        mono = tuple(1 if i in subset else 0 for i in range(nvars))
        terms[mono] = field.one
    return MultiPoly._trusted(field, nvars, terms)
