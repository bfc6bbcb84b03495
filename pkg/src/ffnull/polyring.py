"""Sparse multivariate polynomials over a :class:`~ffnull.field.FieldSpec`.

A polynomial is a map from exponent tuples (monomials) to nonzero field codes.
Affine rings have variables ``x1..xn``; projective rings have ``x0..xn``
(``n + 1`` variables).  Monomials are plain tuples of ints.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    CoefficientNotInFieldError,
    DimensionMismatchError,
    FieldMismatchError,
    NotHomogeneousError,
    RingMismatchError,
    UnknownVariableError,
    ZeroDivisorError,
    ZeroGeneratorError,
    ZeroPolynomialError,
)
from .field import FieldElement, FieldSpec
from .parsing import parse_expression

Monomial = tuple  # tuple[int, ...] of exponents, one per variable


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a | b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _lex_key(m):
    return m


def _grlex_key(m):
    return (sum(m), m)


def _grevlex_key(m):
    return (sum(m), tuple(-x for x in reversed(m)))


class MonomialOrder(Enum):
    """Monomial orders with variable priority ``x_first > x_second > ...``.

    ``key(m)`` maps a monomial to a sort key that grows with the order, so
    ``max(monos, key=order.key)`` is the leading monomial.
    """

    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    @property
    def key(self) -> Callable[[Monomial], tuple]:
        return _KEYS[self]

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def sorted(self, monomials: Iterable[Monomial], descending: bool = True) -> list:
        return sorted(monomials, key=self.key, reverse=descending)

    @classmethod
    def parse(cls, name) -> MonomialOrder:
        if isinstance(name, MonomialOrder):
            return name
        return cls(str(name).lower())


_KEYS = {
    MonomialOrder.LEX: _lex_key,
    MonomialOrder.GRLEX: _grlex_key,
    MonomialOrder.GREVLEX: _grevlex_key,
}

DEFAULT_ORDER = MonomialOrder.GREVLEX


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.  Compares below every int; no arithmetic."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "MINUS_INFINITY"


MINUS_INFINITY = _MinusInfinity()

_VAR = re.compile(r"x(0|[1-9][0-9]*)")


@dataclass(frozen=True)
class PolyRing:
    """``F[x1..xn]`` (affine) or ``F[x0..xn]`` (projective, ``n + 1`` variables)."""

    field: FieldSpec
    n: int
    projective: bool = False

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"number of variables must be a nonnegative integer, got {self.n!r}")

    @property
    def nvars(self) -> int:
        return self.n + 1 if self.projective else self.n

    @property
    def first_label(self) -> int:
        return 0 if self.projective else 1

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def var_names(self) -> list[str]:
        return [f"x{i + self.first_label}" for i in range(self.nvars)]

    def __str__(self):
        return f"F_{self.field.q}[{','.join(self.var_names)}]"

    def var(self, label: int) -> Polynomial:
        """The variable ``x<label>`` (labels start at 0 or 1 depending on the ring)."""
        i = label - self.first_label
        if not 0 <= i < self.nvars:
            raise DimensionMismatchError(f"x{label} is not a variable of {self}")
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial._make(self, {tuple(exps): 1})

    @property
    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(i + self.first_label) for i in range(self.nvars))

    @property
    def zero(self) -> Polynomial:
        return Polynomial._make(self, {})

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def unit_monomial(self) -> Monomial:
        return (0,) * self.nvars

    def constant(self, c) -> Polynomial:
        code = self.field.element(c).code
        return Polynomial._make(self, {self.unit_monomial(): code} if code else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> Polynomial:
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise DimensionMismatchError(f"monomial {exps} has wrong length for {self}")
        code = self.field.element(coeff).code
        return Polynomial._make(self, {exps: code} if code else {})

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            value._check_ring(self)
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Mapping):
            return Polynomial(self, value)
        return self.constant(value)

    def parse(self, text: str) -> Polynomial:
        field = self.field

        def number(n, pos):
            if n >= field.p:
                raise CoefficientNotInFieldError(f"literal {n} is not an element of F_{field.p}", pos, text)
            return self.constant(n)

        def symbol(name, pos):
            if name == "t":
                if field.e == 1:
                    raise CoefficientNotInFieldError(
                        f"'t' is not defined in the prime field F_{field.p}", pos, text
                    )
                return self.constant(field.gen)
            m = _VAR.fullmatch(name)
            if m is None:
                raise UnknownVariableError(f"unknown variable {name!r}", pos, text)
            label = int(m.group(1))
            if not 0 <= label - self.first_label < self.nvars:
                raise UnknownVariableError(f"variable {name!r} is not in {self}", pos, text)
            return self.var(label)

        return parse_expression(text, number, symbol)


class Polynomial:
    """An immutable sparse polynomial.

    ``Polynomial(ring, {(2, 0): 1, (0, 0): 2})`` builds ``x1^2 + 2`` in an
    affine ring with two variables.  Coefficients may be :class:`FieldElement`
    instances of ``ring.field`` or ints (interpreted as integer multiples of 1).
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object] = None):
        codes = {}
        field = ring.field
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ring.nvars or any(x < 0 for x in exps):
                raise DimensionMismatchError(f"bad monomial {exps} for {ring}")
            code = field.element(c).code
            if code:
                prev = codes.get(exps, 0)
                s = field.cadd(prev, code)
                if s:
                    codes[exps] = s
                else:
                    codes.pop(exps, None)
        self.ring = ring
        self._terms = codes
        self._hash = None

    @classmethod
    def _make(cls, ring: PolyRing, codes: dict) -> Polynomial:
        # trusted constructor: codes already nonzero and keyed by valid monomials
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = codes
        obj._hash = None
        return obj

    # --- introspection ---

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def terms(self) -> dict:
        """Fresh ``{monomial: FieldElement}`` dict."""
        f = self.ring.field
        return {m: FieldElement(f, c) for m, c in self._terms.items()}

    def codes(self) -> dict:
        """Fresh ``{monomial: code}`` dict."""
        return dict(self._terms)

    def monomials(self) -> list[Monomial]:
        return list(self._terms)

    def coefficient(self, exps: Sequence[int]) -> FieldElement:
        return FieldElement(self.ring.field, self._terms.get(tuple(exps), 0))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    @property
    def degree(self):
        """Total degree, or ``MINUS_INFINITY`` for the zero polynomial."""
        if not self._terms:
            return MINUS_INFINITY
        return max(sum(m) for m in self._terms)

    def degree_in(self, i: int):
        """Degree in the variable at 0-based position ``i``."""
        if not self._terms:
            return MINUS_INFINITY
        return max(m[i] for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEFAULT_ORDER) -> FieldElement:
        return FieldElement(self.ring.field, self._terms[self.leading_monomial(order)])

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
        lc = self._terms[self.leading_monomial(order)]
        return self._scale_code(self.ring.field.cinv(lc))

    # --- arithmetic ---

    def _check_ring(self, ring: PolyRing):
        if ring != self.ring:
            raise RingMismatchError(f"polynomials from {self.ring} and {ring} cannot be combined")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            other._check_ring(self.ring)
            return other
        if isinstance(other, FieldElement):
            if other.spec != self.ring.field:
                raise FieldMismatchError(f"{other.spec!r} element used with {self.ring}")
            return self.ring.constant(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    def _combine(self, other: Polynomial, sign: int) -> Polynomial:
        field = self.ring.field
        out = dict(self._terms)
        op = field.cadd if sign > 0 else field.csub
        for m, c in other._terms.items():
            s = op(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._make(self.ring, out)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self):
        field = self.ring.field
        return Polynomial._make(self.ring, {m: field.cneg(c) for m, c in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.ring.field
        cadd, cmul = field.cadd, field.cmul
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = cadd(out.get(m, 0), cmul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._make(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def _scale_code(self, code: int) -> Polynomial:
        if code == 0:
            return self.ring.zero
        cmul = self.ring.field.cmul
        return Polynomial._make(self.ring, {m: cmul(c, code) for m, c in self._terms.items()})

    def scale(self, c) -> Polynomial:
        return self._scale_code(self.ring.field.element(c).code)

    def mul_term(self, exps: Monomial, c) -> Polynomial:
        """``self * c * x^exps``."""
        code = self.ring.field.element(c).code
        if code == 0:
            return self.ring.zero
        cmul = self.ring.field.cmul
        return Polynomial._make(
            self.ring,
            {tuple(a + b for a, b in zip(m, exps)): cmul(v, code) for m, v in self._terms.items()},
        )

    # --- comparison ---

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, FieldElement)) and not isinstance(other, bool):
            try:
                return self == self._coerce(other)
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # --- evaluation ---

    def evaluator(self) -> Callable[[Sequence[int]], int]:
        """Compiled evaluation on code tuples; returns a code."""
        field = self.ring.field
        terms = [(c, tuple((i, k) for i, k in enumerate(m) if k)) for m, c in self._terms.items()]
        if field.e == 1:
            p = field.p

            def ev(pt):
                total = 0
                for c, powers in terms:
                    v = c
                    for i, k in powers:
                        v = v * pow(pt[i], k, p) % p
                        if not v:
                            break
                    total += v
                return total % p

            return ev
        cadd, cmul, cpow = field.cadd, field.cmul, field.cpow

        def ev_ext(pt):
            total = 0
            for c, powers in terms:
                v = c
                for i, k in powers:
                    v = cmul(v, cpow(pt[i], k))
                    if not v:
                        break
                total = cadd(total, v)
            return total

        return ev_ext

    def eval_codes(self, point: Sequence[int]) -> int:
        if len(point) != self.ring.nvars:
            raise DimensionMismatchError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        return self.evaluator()(point)

    def evaluate(self, point: Sequence) -> FieldElement:
        field = self.ring.field
        if len(point) != self.ring.nvars:
            raise DimensionMismatchError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
        codes = []
        for a in point:
            if isinstance(a, FieldElement) and a.spec != field:
                raise FieldMismatchError(f"coordinate from {a.spec!r} evaluated in {self.ring}")
            codes.append(field.element(a).code)
        return FieldElement(field, self.evaluator()(codes))

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    # --- text ---

    def _mono_str(self, m: Monomial) -> str:
        names = self.ring.var_names
        parts = []
        for name, k in zip(names, m):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def format(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        """Canonical text: terms in descending ``order``, re-parseable by ``ring.parse``."""
        if not self._terms:
            return "0"
        field = self.ring.field
        out = []
        for m in order.sorted(self._terms):
            coeff = field.format_code(self._terms[m])
            if "+" in coeff:
                coeff = f"({coeff})"
            mono = self._mono_str(m)
            if not mono:
                out.append(coeff)
            elif coeff == "1":
                out.append(mono)
            else:
                out.append(f"{coeff}*{mono}")
        return " + ".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r}, {self.ring})"


@dataclass(frozen=True)
class IdealPresentation:
    """A finite generating list of an ideal; ``homogeneous`` is inferred when omitted."""

    generators: tuple
    homogeneous: bool | None = None

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal presentation needs at least one generator")
        ring = gens[0].ring
        for g in gens[1:]:
            g._check_ring(ring)
        all_homogeneous = all(g.is_homogeneous() for g in gens)
        flag = self.homogeneous
        if flag is None:
            flag = all_homogeneous
        elif flag and not all_homogeneous:
            raise NotHomogeneousError("homogeneous flag set but a generator is not homogeneous")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "homogeneous", flag)

    @property
    def ring(self) -> PolyRing:
        return self.generators[0].ring

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def nonzero(self) -> list:
        return [g for g in self.generators if g]


def as_presentation(gens) -> IdealPresentation:
    if isinstance(gens, IdealPresentation):
        return gens
    if isinstance(gens, Polynomial):
        gens = [gens]
    return IdealPresentation(tuple(gens))


def require_nonzero(gens: Iterable[Polynomial]) -> list:
    gens = list(gens)
    for i, g in enumerate(gens):
        if not g:
            raise ZeroGeneratorError(f"generator {i} is the zero polynomial")
    return gens


# --- division algorithm ---

def _reduce_codes(f: dict, divisors, key, field, quotients=None):
    """Multivariate division of ``f`` by ``divisors``.

    ``divisors`` is a list of ``(lead_monomial, lead_code, terms_dict)``; the
    first divisor whose leading monomial divides the current leading term is
    used.  Returns the remainder dict; quotient terms are accumulated into
    ``quotients`` (list of dicts) when given.
    """
    cadd, csub, cmul, cinv = field.cadd, field.csub, field.cmul, field.cinv
    p = dict(f)
    rem = {}
    inv_leads = [cinv(lc) for _, lc, _ in divisors]
    while p:
        lt = max(p, key=key)
        c = p[lt]
        for idx, (lm, _, terms) in enumerate(divisors):
            if all(a >= b for a, b in zip(lt, lm)):
                factor = cmul(c, inv_leads[idx])
                shift = tuple(a - b for a, b in zip(lt, lm))
                for m, v in terms.items():
                    mm = tuple(a + b for a, b in zip(m, shift))
                    s = csub(p.get(mm, 0), cmul(factor, v))
                    if s:
                        p[mm] = s
                    else:
                        p.pop(mm, None)
                if quotients is not None:
                    qd = quotients[idx]
                    s = cadd(qd.get(shift, 0), factor)
                    if s:
                        qd[shift] = s
                    else:
                        qd.pop(shift, None)
                break
        else:
            rem[lt] = c
            del p[lt]
    return rem


def poly_divmod(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER):
    """Divide ``f`` by the ordered list ``divisors``.

    Returns ``(quotients, remainder)`` with ``f == sum(q*d) + remainder`` and
    no term of the remainder divisible by any divisor's leading monomial.
    """
    order = MonomialOrder.parse(order)
    divs = []
    for i, d in enumerate(divisors):
        d._check_ring(f.ring)
        if not d:
            raise ZeroDivisorError(f"divisor {i} is the zero polynomial")
        lm = d.leading_monomial(order)
        divs.append((lm, d._terms[lm], d._terms))
    qs = [{} for _ in divs]
    rem = _reduce_codes(f._terms, divs, order.key, f.ring.field, qs)
    return [Polynomial._make(f.ring, q) for q in qs], Polynomial._make(f.ring, rem)


# --- function-style API ---

def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    g._check_ring(f.ring)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(f: Polynomial, point: Sequence) -> FieldElement:
    return f.evaluate(point)


def leading_monomial(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
    return f.leading_monomial(MonomialOrder.parse(order))


def poly_parse(text: str, ring: PolyRing) -> Polynomial:
    return ring.parse(text)


def poly_print(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> str:
    return f.format(MonomialOrder.parse(order))
