"""Rational points by exhaustive enumeration, plus the constructive witnesses
and point-count bounds built on top of them.

Enumeration is the verification oracle for the algebraic side of the
package, so it never samples: inputs whose candidate space exceeds
``ENUMERATION_CAP`` points raise :class:`~ffnull.errors.TooLargeError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DimensionMismatchError,
    DuplicatePointsError,
    EmptyPointSetError,
    InputError,
    NotHomogeneousError,
    RingMismatchError,
    TooLargeError,
    ZeroPolynomialError,
)
from .field import FieldElement, FieldSpec
from .groebner import reduced_footprint
from .polyring import DEFAULT_ORDER, MonomialOrder, Polynomial, PolyRing, require_nonzero
from .reduction import affine_reduce

ENUMERATION_CAP = 2**24


def projective_space_size(q: int, n: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def affine_point_codes(field: FieldSpec, n: int) -> Iterator[tuple]:
    """F_q^n in canonical order: lexicographic on codes, last coordinate fastest."""
    return itertools.product(range(field.q), repeat=n)


def projective_point_codes(field: FieldSpec, n: int) -> Iterator[tuple]:
    """Canonical representatives of P^n(F_q): first nonzero coordinate is 1.

    Ordered by the position of that leading 1, then lexicographically on the
    trailing coordinates, e.g. ``[1:0], [1:1], [0:1]`` for P^1(F_2).
    """
    for lead in range(n + 1):
        head = (0,) * lead + (1,)
        for tail in itertools.product(range(field.q), repeat=n - lead):
            yield head + tail


def _canonical_projective(codes: Sequence[int], field: FieldSpec) -> tuple:
    lead = next((c for c in codes if c), None)
    if lead is None:
        raise InputError("the zero vector is not a projective point")
    inv = field.cinv(lead)
    return tuple(field.cmul(c, inv) for c in codes)


def _projective_order_key(codes):
    lead = next(i for i, c in enumerate(codes) if c)
    return (lead, codes)


class _PointSet:
    ring: PolyRing
    codes: tuple

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def q(self) -> int:
        return self.ring.q

    @property
    def points(self) -> list[tuple]:
        f = self.ring.field
        return [tuple(FieldElement(f, c) for c in pt) for pt in self.codes]

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        f = self.ring.field
        for pt in self.codes:
            yield tuple(FieldElement(f, c) for c in pt)

    def to_text(self) -> str:
        """One point per line, coordinates comma-separated in field text form."""
        fmt = self.ring.field.format_code
        return "".join(",".join(fmt(c) for c in pt) + "\n" for pt in self.codes)

    @staticmethod
    def _parse_lines(ring: PolyRing, text: str) -> list[tuple]:
        pts = []
        for line in text.splitlines():
            if not line.strip():
                continue
            coords = [ring.field.parse(c).code for c in line.split(",")]
            if len(coords) != ring.nvars:
                raise DimensionMismatchError(f"point {line!r} has {len(coords)} coordinates, expected {ring.nvars}")
            pts.append(tuple(coords))
        return pts


@dataclass(frozen=True)
class AffinePointSet(_PointSet):
    ring: PolyRing
    codes: tuple

    def __post_init__(self):
        codes = tuple(tuple(pt) for pt in self.codes)
        for pt in codes:
            if len(pt) != self.ring.nvars:
                raise DimensionMismatchError(f"point {pt} has wrong dimension for {self.ring}")
        if any(a >= b for a, b in zip(codes, codes[1:])):
            raise InputError("affine points must be distinct and in canonical order")
        object.__setattr__(self, "codes", codes)

    @classmethod
    def from_points(cls, ring: PolyRing, points) -> AffinePointSet:
        """Normalise arbitrary distinct points (FieldElements or ints) into canonical order."""
        codes = [tuple(ring.field.element(a).code for a in pt) for pt in points]
        if len(set(codes)) != len(codes):
            raise DuplicatePointsError("duplicate points")
        return cls(ring, tuple(sorted(codes)))

    @classmethod
    def from_text(cls, ring: PolyRing, text: str) -> AffinePointSet:
        return cls(ring, tuple(cls._parse_lines(ring, text)))

    def __contains__(self, pt):
        return tuple(self.ring.field.element(a).code for a in pt) in set(self.codes)


@dataclass(frozen=True)
class ProjectivePointSet(_PointSet):
    ring: PolyRing
    codes: tuple

    def __post_init__(self):
        if not self.ring.projective:
            raise RingMismatchError(f"projective point set needs a projective ring, got {self.ring}")
        field = self.ring.field
        codes = tuple(tuple(pt) for pt in self.codes)
        for pt in codes:
            if len(pt) != self.ring.nvars:
                raise DimensionMismatchError(f"point {pt} has wrong dimension for {self.ring}")
            if _canonical_projective(pt, field) != pt:
                raise InputError(f"{pt} is not a canonical representative")
        keys = [_projective_order_key(pt) for pt in codes]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise InputError("projective points must be distinct and in canonical order")
        object.__setattr__(self, "codes", codes)

    @classmethod
    def from_points(cls, ring: PolyRing, points) -> ProjectivePointSet:
        """Canonicalise arbitrary nonzero representatives; proportional duplicates are an error."""
        field = ring.field
        codes = [_canonical_projective([field.element(a).code for a in pt], field) for pt in points]
        if len(set(codes)) != len(codes):
            raise DuplicatePointsError("duplicate projective points")
        return cls(ring, tuple(sorted(codes, key=_projective_order_key)))

    @classmethod
    def from_text(cls, ring: PolyRing, text: str) -> ProjectivePointSet:
        return cls(ring, tuple(cls._parse_lines(ring, text)))

    def __contains__(self, pt):
        field = self.ring.field
        return _canonical_projective([field.element(a).code for a in pt], field) in set(self.codes)


def _ring_of(gens, ring):
    gens = list(gens)
    if ring is None:
        if not gens:
            raise InputError("an empty system needs an explicit ring")
        ring = gens[0].ring
    for g in gens:
        g._check_ring(ring)
    return gens, ring


def _common_zeros(gens, candidates):
    evals = [g.evaluator() for g in gens]
    return tuple(pt for pt in candidates if all(ev(pt) == 0 for ev in evals))


def enumerate_affine_zeros(gens, ring: PolyRing | None = None) -> AffinePointSet:
    """All common zeros in F_q^n, by exhaustive evaluation."""
    gens, ring = _ring_of(gens, ring)
    size = ring.q**ring.nvars
    if size > ENUMERATION_CAP:
        raise TooLargeError(size, ENUMERATION_CAP)
    return AffinePointSet(ring, _common_zeros(gens, affine_point_codes(ring.field, ring.nvars)))


def enumerate_projective_zeros(gens, ring: PolyRing | None = None) -> ProjectivePointSet:
    """All common zeros in P^n(F_q), as canonical representatives.

    An empty system is the zero ideal, whose zero set is all of P^n(F_q).
    """
    gens, ring = _ring_of(gens, ring)
    if not ring.projective:
        raise RingMismatchError(f"projective enumeration needs a projective ring, got {ring}")
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"{g} is not homogeneous")
    size = projective_space_size(ring.q, ring.n)
    if size > ENUMERATION_CAP:
        raise TooLargeError(size, ENUMERATION_CAP)
    return ProjectivePointSet(ring, _common_zeros(gens, projective_point_codes(ring.field, ring.n)))


def find_nonvanishing_point(f: Polynomial) -> tuple | None:
    """First canonical point (affine, or projective in a projective ring) where ``f != 0``."""
    ring = f.ring
    if ring.projective:
        candidates = projective_point_codes(ring.field, ring.n)
    else:
        candidates = affine_point_codes(ring.field, ring.nvars)
    ev = f.evaluator()
    for pt in candidates:
        if ev(pt):
            return tuple(FieldElement(ring.field, c) for c in pt)
    return None


def indicator_polynomials(gens) -> tuple[Polynomial, Polynomial]:
    """``g = 1 - prod(1 - f_i^(q-1))`` and ``h = 1 - g``.

    On F_q^n, ``g`` is 0 on the common zeros and 1 elsewhere; ``g`` lies in
    the ideal generated by ``gens``.
    """
    gens = require_nonzero(gens)
    ring = gens[0].ring
    q = ring.q
    prod = ring.one
    for f in gens:
        f._check_ring(ring)
        prod = prod * (ring.one - f ** (q - 1))
    g = ring.one - prod
    return g, ring.one - g


def interpolation_basis(points, ring: PolyRing | None = None, reduce: bool = False) -> list[Polynomial]:
    """Polynomials ``p_i`` with ``p_i(a_j) = 1 if i == j else 0``.

    ``p_i`` is the product over ``j != i`` of
    ``(x_t - a_j[t]) / (a_i[t] - a_j[t])`` where ``t`` is the first coordinate
    in which ``a_i`` and ``a_j`` differ.  With ``reduce=True`` partial products
    are reduced modulo the field equations, which keeps degrees below ``q``
    in each variable without changing any value on F_q^n.
    """
    if isinstance(points, AffinePointSet):
        ring = points.ring
        codes = list(points.codes)
    else:
        if ring is None:
            raise InputError("a plain point list needs an explicit ring")
        codes = [tuple(ring.field.element(a).code for a in pt) for pt in points]
    if not codes:
        raise EmptyPointSetError("interpolation needs at least one point")
    if len(set(codes)) != len(codes):
        raise DuplicatePointsError("interpolation points must be distinct")
    for pt in codes:
        if len(pt) != ring.nvars:
            raise DimensionMismatchError(f"point {pt} has wrong dimension for {ring}")
    field = ring.field
    basis = []
    for i, a in enumerate(codes):
        p = ring.one
        for j, b in enumerate(codes):
            if j == i:
                continue
            t = next(k for k in range(ring.nvars) if a[k] != b[k])
            denom_inv = field.cinv(field.csub(a[t], b[t]))
            exps = [0] * ring.nvars
            exps[t] = 1
            factor = (ring.monomial(exps) - ring.constant(FieldElement(field, b[t]))).scale(
                FieldElement(field, denom_inv)
            )
            p = p * factor
            if reduce:
                p = affine_reduce(p).value
        basis.append(p)
    return basis


def footprint_bound(gens, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """Upper bound on the number of rational common zeros: size of the reduced footprint."""
    return len(reduced_footprint(gens, order))


def ore_bound_raw(f: Polynomial) -> int:
    """``d * q^(n-1)`` for a nonzero ``f`` of degree ``d``."""
    if not f:
        raise ZeroPolynomialError("the zero polynomial has no degree bound")
    n, q, d = f.ring.nvars, f.ring.q, f.degree
    if n == 0:
        return 0
    return d * q ** (n - 1)


def ore_bound(f: Polynomial) -> int:
    """Ore's bound clamped to the size of F_q^n."""
    return min(ore_bound_raw(f), f.ring.q**f.ring.nvars)


def reduced_multiples_count(lead: Sequence[int], q: int) -> int:
    """Number of reduced monomials divisible by ``lead``: ``prod(q - i_j)``, or 0 if ``lead`` is not reduced."""
    count = 1
    for i in lead:
        if i >= q:
            return 0
        count *= q - i
    return count
