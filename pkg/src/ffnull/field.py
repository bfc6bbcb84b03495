"""Exact arithmetic in F_q, q = p^e, realised as F_p[t]/(modulus).

Every element has an integer *code* in ``range(q)``: the base-p digits of the
code are the coefficients of its canonical representative, constant term in
the lowest digit.  Enumerating codes ``0, 1, ..., q-1`` is the canonical
element order (0 first, 1 second, constant coefficient varying fastest).
Polynomials and point sets store codes internally and only wrap them in
:class:`FieldElement` at the API boundary.

Dense coefficient vectors (``modulus``, ``FieldElement.rep``) are in
ascending degree order: ``vec[i]`` is the coefficient of ``t**i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import (
    CoefficientNotInFieldError,
    DegreeMismatchError,
    FieldMismatchError,
    InputError,
    NonPrimeError,
    ReducibleModulusError,
    UnknownVariableError,
)
from .parsing import parse_expression

MAX_ORDER = 2**20
# log/antilog tables are built lazily up to this order; above it we multiply
# representatives directly.
_TABLE_LIMIT = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raises NonPrimeError otherwise."""
    if q < 2:
        raise NonPrimeError(q)
    p = 2
    while q % p:
        p += 1
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise NonPrimeError(q)
    return p, e


# --- dense univariate helpers over F_p (ascending coefficient lists) ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    m = _trim(list(m))
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _has_root(m: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(m):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def _monic_polys(degree: int, p: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of the given degree, ordered by their lower coefficients' code."""
    for low in range(p**degree):
        coeffs = []
        for _ in range(degree):
            coeffs.append(low % p)
            low //= p
        yield tuple(coeffs) + (1,)


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic ``m`` over F_p.

    Degrees up to 3 only need the root test; larger degrees are checked by
    trial division by every monic polynomial of degree at most ``deg/2``.
    """
    deg = len(m) - 1
    if deg < 1:
        return False
    if deg <= 3:
        return not _has_root(m, p)
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(d, p):
            if not _upoly_rem(m, divisor, p):
                return False
    return True


def find_irreducible(p: int, e: int) -> tuple[int, ...]:
    for m in _monic_polys(e, p):
        if is_irreducible(m, p):
            return m
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")  # pragma: no cover


def _format_upoly(rep: Sequence[int], var: str = "t") -> str:
    parts = []
    for i in range(len(rep) - 1, -1, -1):
        c = rep[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(parts) if parts else "0"


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with q = p**e.

    >>> F4 = FieldSpec(2, 2)
    >>> F4.modulus
    (1, 1, 1)
    >>> t = F4.gen
    >>> str(t * t)
    't+1'
    """

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        p, e = self.p, self.e
        if not isinstance(p, int) or not is_prime(p):
            raise NonPrimeError(p)
        if not isinstance(e, int) or e < 1:
            raise DegreeMismatchError(f"extension degree must be a positive integer, got {e!r}")
        if p**e > MAX_ORDER:
            raise InputError(f"field order {p}^{e} exceeds the supported maximum 2^20")
        if self.modulus is None:
            modulus = (0, 1) if e == 1 else find_irreducible(p, e)
        else:
            modulus = tuple(int(c) % p for c in self.modulus)
            while len(modulus) > 1 and modulus[-1] == 0:
                modulus = modulus[:-1]
            if len(modulus) - 1 != e:
                raise DegreeMismatchError(f"modulus has degree {len(modulus) - 1}, expected {e}")
            if modulus[-1] != 1:
                raise InputError("modulus must be monic")
            if e == 1:
                modulus = (0, 1)
            elif not is_irreducible(modulus, p):
                raise ReducibleModulusError(
                    f"modulus {_format_upoly(modulus)} is reducible over F_{p}"
                )
        object.__setattr__(self, "modulus", modulus)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    @property
    def modulus_text(self) -> str:
        return _format_upoly(self.modulus)

    def __repr__(self):
        if self.e == 1:
            return f"FieldSpec(F_{self.p})"
        return f"FieldSpec(F_{self.q}, modulus={_format_upoly(self.modulus)})"

    # --- conversions between codes and representatives ---

    def rep_of(self, code: int) -> tuple[int, ...]:
        rep = []
        for _ in range(self.e):
            rep.append(code % self.p)
            code //= self.p
        return tuple(rep)

    def code_of(self, rep: Sequence[int]) -> int:
        if len(rep) > self.e:
            raise DegreeMismatchError(f"representative has {len(rep)} coordinates, expected {self.e}")
        code = 0
        for c in reversed(rep):
            if not 0 <= c < self.p:
                raise InputError(f"coordinate {c} not in [0, {self.p})")
            code = code * self.p + c
        return code

    # --- arithmetic on raw codes (hot path used by the polynomial layer) ---

    def cadd(self, a: int, b: int) -> int:
        if self.e == 1:
            s = a + b
            return s - self.p if s >= self.p else s
        if self.p == 2:
            return a ^ b
        return self._add_table[a][b] if self._add_table else self._digit_add(a, b, 1)

    def csub(self, a: int, b: int) -> int:
        if self.e == 1:
            s = a - b
            return s + self.p if s < 0 else s
        if self.p == 2:
            return a ^ b
        return self._digit_add(a, b, -1)

    def cneg(self, a: int) -> int:
        if self.e == 1:
            return (self.p - a) % self.p
        if self.p == 2:
            return a
        return self._digit_add(0, a, -1)

    def cmul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        tables = self._log_tables
        if tables is None:
            return self._slow_mul(a, b)
        exp, log = tables
        return exp[log[a] + log[b]]

    def cinv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.q}")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self.cpow(a, self.q - 2)

    def cpow(self, a: int, k: int) -> int:
        if k < 0:
            return self.cpow(self.cinv(a), -k)
        if k == 0:
            return 1
        if a == 0:
            return 0
        if self.e == 1:
            return pow(a, k, self.p)
        tables = self._log_tables
        if tables is not None:
            exp, log = tables
            return exp[log[a] * k % (self.q - 1)]
        result, base = 1, a
        while k:
            if k & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            k >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Code of the image of the integer ``n`` (i.e. ``n * 1``)."""
        return n % self.p

    def _digit_add(self, a: int, b: int, sign: int) -> int:
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + sign * (b % p)) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def _slow_mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        ra, rb = self.rep_of(a), self.rep_of(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(ra):
            if x:
                for j, y in enumerate(rb):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _upoly_rem(prod, self.modulus, p)
        return self.code_of(rem)

    @cached_property
    def _add_table(self):
        if self.q > 256:
            return None
        return [[self._digit_add(a, b, 1) for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def _log_tables(self):
        q = self.q
        if self.e == 1 or q > _TABLE_LIMIT:
            return None
        order = q - 1
        prime_factors = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
        for g in range(2, q):
            if all(self._slow_pow(g, order // r) != 1 for r in prime_factors):
                break
        # exp is doubled so log[a] + log[b] never needs a modulo
        exp = [0] * (2 * order)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = exp[i + order] = x
            log[x] = i
            x = self._slow_mul(x, g)
        return exp, log

    def _slow_pow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            k >>= 1
        return result

    # --- public element API ---

    def from_code(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise InputError(f"code {code} not in [0, {self.q})")
        return FieldElement(self, code)

    def __call__(self, value) -> FieldElement:
        return self.element(value)

    def element(self, value) -> FieldElement:
        """Coerce an int (integer image), a ``t``-polynomial string, a dense
        representative, or an element of this same field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatchError(f"{value.spec!r} element used in {self!r}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (tuple, list)):
            return FieldElement(self, self.code_of(tuple(value)))
        raise TypeError(f"cannot convert {type(value).__name__} to a field element")

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The class of ``t`` (equal to 0 in a prime field)."""
        return FieldElement(self, self.code_of((0, 1)) if self.e > 1 else 0)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    def format_code(self, code: int) -> str:
        if self.e == 1:
            return str(code)
        return _format_upoly(self.rep_of(code))

    def parse(self, text: str) -> FieldElement:
        """Parse the element text form: integers ``0..p-1`` combined with ``t``."""

        def number(n, pos):
            if n >= self.p:
                raise CoefficientNotInFieldError(f"literal {n} is not an element of F_{self.p}", pos, text)
            return FieldElement(self, n)

        def symbol(name, pos):
            if name == "t":
                if self.e == 1:
                    raise CoefficientNotInFieldError(f"'t' is not defined in the prime field F_{self.p}", pos, text)
                return self.gen
            raise UnknownVariableError(f"unknown symbol {name!r}", pos, text)

        return parse_expression(text, number, symbol)


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of ``spec``; ``code`` is its canonical integer index."""

    spec: FieldSpec
    code: int

    @property
    def rep(self) -> tuple[int, ...]:
        return self.spec.rep_of(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatchError(f"cannot combine elements of {self.spec!r} and {other.spec!r}")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.cadd(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.csub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.csub(b, self.code))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.cmul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.cmul(self.code, self.spec.cinv(b)))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.cmul(b, self.spec.cinv(self.code)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.cneg(self.code))

    def __pow__(self, k: int):
        return FieldElement(self.spec, self.spec.cpow(self.code, k))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.cinv(self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.spec.format_code(self.code)

    def __repr__(self):
        return f"FieldElement({self}, F_{self.spec.q})"


def field_make(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Validated field F_{p^e}; picks the smallest monic irreducible modulus if none is given."""
    return FieldSpec(p, e, None if modulus is None else tuple(modulus))


def field_from_order(q: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    p, e = prime_power(q)
    return field_make(p, e, modulus)


def field_arith(a: FieldElement, b: FieldElement | None, op: str) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, inv, pow}; for ``pow`` ``b`` is an int exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a**b
    raise ValueError(f"unknown field operation {op!r}")


def field_enumerate(spec: FieldSpec) -> list[FieldElement]:
    return spec.elements()


def iter_codes(spec: FieldSpec, n: int) -> Iterator[tuple[int, ...]]:
    """All points of F_q^n as code tuples, lexicographic, last coordinate fastest."""
    return itertools.product(range(spec.q), repeat=n)
