"""Normal forms modulo the field-equation ideal and the Fermat ideal.

Affine: every polynomial is uniquely ``g + gamma`` with ``g`` reduced (each
exponent at most ``q - 1``) and ``gamma`` in the ideal generated by
``x_i^q - x_i``.  Projective: every homogeneous polynomial of degree d is
uniquely ``g + gamma`` with ``g`` projectively reduced and ``gamma`` in the
ideal generated by the Fermat polynomials ``x_i^q x_j - x_i x_j^q``.

Both reductions process monomials from the largest down (w.r.t. a fixed
monomial order) and apply one exponent-transfer rewrite at a time, recording
the multiple of the generator that was subtracted.  Each rewrite produces a
strictly smaller monomial in every supported order, so a monomial popped from
the work queue never receives further contributions.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .errors import NotHomogeneousError, RingMismatchError
from .polyring import (
    DEFAULT_ORDER,
    MINUS_INFINITY,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
)


class _Desc:
    # heap entry ordering monomials by descending order key
    __slots__ = ("key", "mono")

    def __init__(self, key, mono):
        self.key = key
        self.mono = mono

    def __lt__(self, other):
        return self.key > other.key


def _rewrite(f: Polynomial, step, order: MonomialOrder):
    """Run the largest-first rewrite loop.

    ``step(mono)`` returns ``None`` for a normal monomial, otherwise
    ``(generator_index, cofactor_monomial, new_monomial)`` meaning
    ``mono = cofactor_monomial * generator + new_monomial``.
    Returns ``(normal_form_codes, {generator_index: cofactor_codes})``.
    """
    field = f.ring.field
    cadd = field.cadd
    key = order.key
    pending = dict(f._terms)
    heap = [_Desc(key(m), m) for m in pending]
    heapq.heapify(heap)
    out: dict = {}
    cofactors: dict = {}
    while heap:
        m = heapq.heappop(heap).mono
        c = pending.pop(m)
        if not c:
            continue
        rw = step(m)
        if rw is None:
            out[m] = c
            continue
        gi, cof_mono, new = rw
        cof = cofactors.setdefault(gi, {})
        s = cadd(cof.get(cof_mono, 0), c)
        if s:
            cof[cof_mono] = s
        else:
            cof.pop(cof_mono, None)
        if new in pending:
            pending[new] = cadd(pending[new], c)
        else:
            pending[new] = c
            heapq.heappush(heap, _Desc(key(new), new))
    return out, cofactors


# --- affine ---

def is_reduced_monomial(m: Monomial, q: int) -> bool:
    return all(x <= q - 1 for x in m)


def is_reduced(f: Polynomial) -> bool:
    q = f.ring.q
    return all(is_reduced_monomial(m, q) for m in f._terms)


def field_equations(ring: PolyRing) -> list[Polynomial]:
    """The generators ``x_i^q - x_i`` of the field-equation ideal, one per variable."""
    q = ring.q
    gens = []
    for i in range(ring.nvars):
        hi = [0] * ring.nvars
        lo = [0] * ring.nvars
        hi[i] = q
        lo[i] = 1
        gens.append(ring.monomial(hi) - ring.monomial(lo))
    return gens


def _affine_step(q: int):
    def step(m):
        for j, x in enumerate(m):
            if x >= q:
                cof = m[:j] + (x - q,) + m[j + 1:]
                new = m[:j] + (x - q + 1,) + m[j + 1:]
                return j, cof, new
        return None

    return step


@dataclass(frozen=True)
class AffineReducedForm:
    value: Polynomial
    original_degree: object


def _affine(f: Polynomial, order: MonomialOrder):
    return _rewrite(f, _affine_step(f.ring.q), MonomialOrder.parse(order))


def affine_reduce(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> AffineReducedForm:
    """The unique reduced polynomial congruent to ``f`` modulo the field equations."""
    out, _ = _affine(f, order)
    return AffineReducedForm(Polynomial._make(f.ring, out), f.degree)


def gamma_q_cofactors(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> list[Polynomial]:
    """Cofactors ``c_i`` with ``f == affine_reduce(f).value + sum(c_i * (x_i^q - x_i))``."""
    _, cof = _affine(f, order)
    return [Polynomial._make(f.ring, cof.get(i, {})) for i in range(f.ring.nvars)]


def vanishes_on_affine_space(f: Polynomial) -> bool:
    return affine_reduce(f).value.is_zero()


def reduced_monomials(ring: PolyRing) -> list[Monomial]:
    """All reduced monomials (exponents at most q-1), lexicographically."""
    return list(itertools.product(range(ring.q), repeat=ring.nvars))


# --- projective ---

def is_projectively_reduced_monomial(m: Monomial, q: int) -> bool:
    """Exponents of all variables strictly before the last occurring one are at most q-1."""
    last = max((i for i, x in enumerate(m) if x), default=-1)
    return all(m[i] <= q - 1 for i in range(last))


def is_projectively_reduced(f: Polynomial) -> bool:
    q = f.ring.q
    return all(is_projectively_reduced_monomial(m, q) for m in f._terms)


def fermat_pairs(ring: PolyRing) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(ring.nvars), 2))


def fermat_polynomials(ring: PolyRing) -> list[Polynomial]:
    """``x_i^q x_j - x_i x_j^q`` for ``i < j`` (0-based positions), in lexicographic pair order."""
    q = ring.q
    gens = []
    for i, j in fermat_pairs(ring):
        a = [0] * ring.nvars
        b = [0] * ring.nvars
        a[i], a[j] = q, 1
        b[i], b[j] = 1, q
        gens.append(ring.monomial(a) - ring.monomial(b))
    return gens


def _projective_step(q: int, pair_index: dict):
    def step(m):
        last = max((i for i, x in enumerate(m) if x), default=-1)
        for j in range(last):
            x = m[j]
            if x >= q:
                cof = list(m)
                cof[j] -= q
                cof[last] -= 1
                new = list(m)
                new[j] -= q - 1
                new[last] += q - 1
                return pair_index[(j, last)], tuple(cof), tuple(new)
        return None

    return step


@dataclass(frozen=True)
class ProjectiveReducedForm:
    value: Polynomial
    degree: object


def _check_projective(f: Polynomial):
    if not f.ring.projective:
        raise RingMismatchError(f"projective reduction needs a projective ring, got {f.ring}")
    if not f.is_homogeneous():
        raise NotHomogeneousError(f"{f} is not homogeneous")


def _projective(f: Polynomial, order: MonomialOrder):
    _check_projective(f)
    pair_index = {pr: k for k, pr in enumerate(fermat_pairs(f.ring))}
    return _rewrite(f, _projective_step(f.ring.q, pair_index), MonomialOrder.parse(order))


def projective_reduce(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> ProjectiveReducedForm:
    """The unique projectively reduced form of a homogeneous ``f`` modulo the Fermat ideal."""
    out, _ = _projective(f, order)
    return ProjectiveReducedForm(Polynomial._make(f.ring, out), f.degree if f else MINUS_INFINITY)


def fermat_cofactors(f: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> list[Polynomial]:
    """Cofactors aligned with :func:`fermat_polynomials`:
    ``f == projective_reduce(f).value + sum(c_k * fermat_k)``."""
    _, cof = _projective(f, order)
    return [Polynomial._make(f.ring, cof.get(k, {})) for k in range(len(fermat_pairs(f.ring)))]


def vanishes_on_projective_space(f: Polynomial) -> bool:
    return projective_reduce(f).value.is_zero()


def projectively_reduced_monomials(ring: PolyRing, d: int) -> list[Monomial]:
    """Projectively reduced monomials of total degree ``d``."""
    q = ring.q
    out = []
    for m in _compositions(d, ring.nvars):
        if is_projectively_reduced_monomial(m, q):
            out.append(m)
    return out


def _compositions(d: int, k: int):
    if k == 0:
        if d == 0:
            yield ()
        return
    if k == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, k - 1):
            yield (first,) + rest
