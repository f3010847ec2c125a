#!/usr/bin/env python3

"""Exact field arithmetic: GF(p), GF(p^k) = GF(p)[t]/(f(t)) and QQ.

Field values are kept in a canonical *raw* form so that polynomial code can
run on plain Python objects:

- prime field: ``int`` residue in ``[0, p)``
- extension field: ``tuple`` of ``k`` residues, low-degree coefficient first
- rationals: :class:`fractions.Fraction` (always in lowest terms)

:class:`FieldElem` wraps a raw value together with its :class:`FieldDesc`
for the public scalar API (``arith``/``power`` and operator overloads).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterator, Literal, Optional, Sequence, Tuple

from sympy import isprime

from .errors import FieldDivisionError, FieldError, FieldMismatchError


FieldKind = Literal["prime", "extension", "rationals"]
ArithOp = Literal["add", "sub", "mul", "div"]

MAX_PRIME = 2**32
MAX_EXTENSION_ORDER = 2**20

_TERM_RE = re.compile(r"^(\d*)\*?(t(?:\^(\d+))?)?$")
_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


# -- univariate helpers over GF(p); coefficient lists are low-degree first ------


def _trim(coeffs: Sequence[int]) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _upoly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``b`` over GF(p)."""
    rem = _trim([c % p for c in a])
    db = len(b) - 1
    while len(rem) - 1 >= db and rem:
        lead = rem[-1]
        shift = len(rem) - 1 - db
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        rem = _trim(rem)
    return rem


def _upoly_has_root(f: Sequence[int], p: int) -> bool:
    for a in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * a + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Root search first, then trial division by every monic polynomial of
    degree 2..k//2.

    Args:
        modulus: Coefficients, low-degree first, leading coefficient 1.
        p: Prime characteristic.

    Returns:
        bool: Whether ``modulus`` is irreducible.
    """
    k = len(modulus) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if _upoly_has_root(modulus, p):
        return False
    for deg in range(2, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            if not _upoly_mod(modulus, divisor, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """Lex-least monic irreducible of degree ``k`` over GF(p).

    Candidates are compared on ``(c_0, c_1, ..., c_{k-1})``, low degree first.
    """
    for low in itertools.product(range(p), repeat=k):
        candidate = tuple(low) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")  # pragma: no cover


@lru_cache(maxsize=1 << 16)
def _ext_mul(p: int, modulus: Tuple[int, ...], a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[int, ...]:
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    rem = _upoly_mod(prod, modulus, p)
    return tuple(rem) + (0,) * (k - len(rem))


@dataclass(frozen=True)
class FieldDesc:
    """Exact field specification.

    Attributes:
        kind: ``prime``, ``extension`` or ``rationals``.
        p: Characteristic (``None`` for rationals).
        k: Extension degree (1 for prime fields and rationals).
        modulus: Monic irreducible, low-degree first, length ``k + 1``
            (extension only).
    """

    kind: FieldKind
    p: Optional[int] = None
    k: int = 1
    modulus: Optional[Tuple[int, ...]] = None

    @property
    def q(self) -> Optional[int]:
        if self.p is None:
            return None
        return self.p**self.k

    @property
    def is_finite(self) -> bool:
        return self.kind != "rationals"

    # -- constants and conversions ------------------------------------------

    @property
    def zero(self) -> Any:
        if self.kind == "prime":
            return 0
        if self.kind == "extension":
            return (0,) * self.k
        return Fraction(0)

    @property
    def one(self) -> Any:
        if self.kind == "prime":
            return 1
        if self.kind == "extension":
            return (1,) + (0,) * (self.k - 1)
        return Fraction(1)

    def from_int(self, n: int) -> Any:
        if self.kind == "prime":
            return n % self.p
        if self.kind == "extension":
            return (n % self.p,) + (0,) * (self.k - 1)
        return Fraction(n)

    def from_fraction(self, value: Fraction) -> Any:
        """Embed a rational; only QQ accepts non-integers."""
        value = Fraction(value)
        if self.kind == "rationals":
            return value
        if value.denominator != 1:
            raise FieldError(f"rational {value} is not an element of {self}")
        return self.from_int(value.numerator)

    def from_coeffs(self, coeffs: Sequence[int]) -> Any:
        """Element ``sum c_i t^i`` of an extension field (reduced mod f)."""
        if self.kind != "extension":
            raise FieldError(f"{self} has no generator t")
        rem = _upoly_mod(coeffs, self.modulus, self.p)
        return tuple(rem) + (0,) * (self.k - len(rem))

    def generator(self) -> Any:
        return self.from_coeffs([0, 1])

    def canonical(self, value: Any) -> Any:
        """Validate a raw value and return its canonical form."""
        if self.kind == "prime":
            if isinstance(value, bool) or not isinstance(value, int):
                raise FieldMismatchError(f"{value!r} is not an element of {self}")
            return value % self.p
        if self.kind == "extension":
            if not isinstance(value, tuple) or len(value) != self.k:
                raise FieldMismatchError(f"{value!r} is not an element of {self}")
            return tuple(int(c) % self.p for c in value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        raise FieldMismatchError(f"{value!r} is not an element of {self}")

    # -- raw arithmetic -----------------------------------------------------

    def is_zero(self, a: Any) -> bool:
        if self.kind == "extension":
            return not any(a)
        return a == 0

    def add(self, a: Any, b: Any) -> Any:
        if self.kind == "prime":
            return (a + b) % self.p
        if self.kind == "extension":
            p = self.p
            return tuple((x + y) % p for x, y in zip(a, b))
        return a + b

    def sub(self, a: Any, b: Any) -> Any:
        if self.kind == "prime":
            return (a - b) % self.p
        if self.kind == "extension":
            p = self.p
            return tuple((x - y) % p for x, y in zip(a, b))
        return a - b

    def neg(self, a: Any) -> Any:
        if self.kind == "prime":
            return (-a) % self.p
        if self.kind == "extension":
            p = self.p
            return tuple((-x) % p for x in a)
        return -a

    def mul(self, a: Any, b: Any) -> Any:
        if self.kind == "prime":
            return (a * b) % self.p
        if self.kind == "extension":
            return _ext_mul(self.p, self.modulus, a, b)
        return a * b

    def inv(self, a: Any) -> Any:
        if self.is_zero(a):
            raise FieldDivisionError(f"division by zero in {self}")
        if self.kind == "prime":
            return pow(a, self.p - 2, self.p)
        if self.kind == "extension":
            return self.pow(a, self.q - 2)
        return 1 / a

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def pow(self, a: Any, e: int) -> Any:
        """Square-and-multiply; ``0^0 = 1``."""
        if e < 0:
            raise FieldError("negative exponent")
        if self.kind == "prime":
            return pow(a, e, self.p)
        if self.kind == "rationals":
            return a**e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- enumeration, ordering, text -----------------------------------------

    def elements(self) -> Iterator[Any]:
        """All elements by integer value, low coefficient fastest (finite fields only)."""
        if self.kind == "prime":
            yield from range(self.p)
        elif self.kind == "extension":
            for high_first in itertools.product(range(self.p), repeat=self.k):
                yield tuple(reversed(high_first))
        else:
            raise FieldError("QQ is infinite")

    def sort_key(self, a: Any) -> str:
        """Lexicographic key on the canonical serialization."""
        return self.format(a)

    def format(self, a: Any) -> str:
        if self.kind == "prime":
            return str(a)
        if self.kind == "rationals":
            return str(a)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = a[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "t" if i == 1 else f"t^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> Any:
        """Parse the canonical text of an element (inverse of :meth:`format`)."""
        text = text.replace(" ", "")
        if self.kind == "rationals":
            if not _RATIONAL_RE.match(text):
                raise FieldError(f"not a rational literal: {text!r}")
            try:
                return Fraction(text)
            except ZeroDivisionError as exc:
                raise FieldDivisionError(f"zero denominator in {text!r}") from exc
        if self.kind == "prime":
            if not re.match(r"^-?\d+$", text):
                raise FieldError(f"not an element of {self}: {text!r}")
            return int(text) % self.p
        coeffs: dict[int, int] = {}
        for chunk in text.split("+"):
            match = _TERM_RE.match(chunk)
            if not chunk or not match or (not match.group(1) and not match.group(2)):
                raise FieldError(f"not an element of {self}: {text!r}")
            if "*" in chunk and not (match.group(1) and match.group(2)):
                raise FieldError(f"not an element of {self}: {text!r}")
            coeff = int(match.group(1)) if match.group(1) else 1
            if match.group(2):
                power = int(match.group(3)) if match.group(3) else 1
            else:
                power = 0
            coeffs[power] = coeffs.get(power, 0) + coeff
        dense = [0] * (max(coeffs) + 1)
        for power, coeff in coeffs.items():
            dense[power] = coeff
        return self.from_coeffs(dense)

    def elem(self, value: Any) -> "FieldElem":
        return FieldElem(self, self.canonical(value))

    def __str__(self) -> str:
        if self.kind == "rationals":
            return "QQ"
        if self.kind == "prime":
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}) mod {self._format_modulus()}"

    def _format_modulus(self) -> str:
        terms = []
        for i in range(self.k, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms)


QQ = FieldDesc("rationals")


def make_field(
    kind: FieldKind,
    p: Optional[int] = None,
    k: int = 1,
    modulus: Optional[Sequence[int]] = None,
) -> FieldDesc:
    """Build and validate a field description.

    Args:
        kind: ``prime``, ``extension`` or ``rationals``.
        p: Prime characteristic.
        k: Extension degree; must be 1 for prime fields and at least 2 for
            extension fields.
        modulus: Monic degree-``k`` modulus, low-degree first. When omitted
            for an extension, the lex-least monic irreducible is chosen.

    Returns:
        FieldDesc: A validated field.

    Raises:
        FieldError: Non-prime ``p``, ``k < 1``, wrong or reducible modulus.
    """
    if kind == "rationals":
        return QQ
    if kind not in ("prime", "extension"):
        raise FieldError(f"unknown field kind: {kind!r}")
    if p is None or isinstance(p, bool) or not isinstance(p, int):
        raise FieldError("characteristic p is required")
    if p < 2 or p >= MAX_PRIME or not isprime(p):
        raise FieldError(f"p={p} is not a supported prime")
    if not isinstance(k, int) or k < 1:
        raise FieldError(f"extension degree k={k} must be >= 1")

    if kind == "prime":
        if k != 1:
            raise FieldError("prime fields have k = 1; use kind 'extension'")
        if modulus is not None:
            raise FieldError("prime fields take no modulus")
        return FieldDesc("prime", p=p, k=1)

    if k == 1:
        raise FieldError("k = 1 is a prime field; use kind 'prime'")
    if k > MAX_EXTENSION_ORDER.bit_length() or p**k > MAX_EXTENSION_ORDER:
        raise FieldError(f"GF({p}^{k}) is larger than the supported {MAX_EXTENSION_ORDER}")
    if modulus is None:
        chosen = least_irreducible(p, k)
    else:
        chosen = tuple(int(c) % p for c in modulus)
        if len(_trim(chosen)) != k + 1:
            raise FieldError(f"modulus degree does not match k={k}")
        if chosen[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(chosen, p):
            raise FieldError(f"modulus is reducible over GF({p})")
    return FieldDesc("extension", p=p, k=k, modulus=chosen)


@dataclass(frozen=True)
class FieldElem:
    """An element of a :class:`FieldDesc` in canonical form."""

    field: FieldDesc
    value: Any

    def _peer(self, other: Any) -> Any:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other: Any) -> "FieldElem":
        b = self._peer(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FieldElem":
        b = self._peer(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other: Any) -> "FieldElem":
        b = self._peer(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.field, self.field.sub(b, self.value))

    def __mul__(self, other: Any) -> "FieldElem":
        b = self._peer(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "FieldElem":
        b = self._peer(other)
        return NotImplemented if b is NotImplemented else FieldElem(self.field, self.field.div(self.value, b))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> "FieldElem":
        return power(self, e)

    def __bool__(self) -> bool:
        return not self.field.is_zero(self.value)

    def __str__(self) -> str:
        return self.field.format(self.value)


def arith(a: FieldElem, b: FieldElem, op: ArithOp) -> FieldElem:
    """Exact ``a op b`` in the common field of ``a`` and ``b``.

    Raises:
        FieldMismatchError: ``a`` and ``b`` come from different fields.
        FieldDivisionError: ``op == 'div'`` and ``b`` is zero.
    """
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field} vs {b.field}")
    field = a.field
    if op == "add":
        return FieldElem(field, field.add(a.value, b.value))
    if op == "sub":
        return FieldElem(field, field.sub(a.value, b.value))
    if op == "mul":
        return FieldElem(field, field.mul(a.value, b.value))
    if op == "div":
        return FieldElem(field, field.div(a.value, b.value))
    raise ValueError(f"unknown op {op!r}")


def power(a: FieldElem, e: int) -> FieldElem:
    """``a ** e`` by square-and-multiply, with ``0 ** 0 = 1``."""
    return FieldElem(a.field, a.field.pow(a.value, e))


def serialize_elem(a: FieldElem) -> str:
    return a.field.format(a.value)


def parse_elem(field: FieldDesc, text: str) -> FieldElem:
    return FieldElem(field, field.parse(text))
