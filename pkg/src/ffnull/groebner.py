"""Reduced Gröbner bases, footprints and ideal-membership tests.

Buchberger's algorithm with the normal selection strategy (smallest lcm
first) and both of Buchberger's criteria for discarding pairs.  The output
is the reduced, monic Gröbner basis, sorted by descending leading monomial,
so it is unique for a given ideal and order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import ResourceLimitError
from .polyring import (
    DEFAULT_ORDER,
    IdealPresentation,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    _reduce_codes,
    as_presentation,
    mono_divides,
    require_nonzero,
)
from .reduction import fermat_polynomials, field_equations, reduced_monomials

MAX_PAIRS = 10_000
MAX_PAIR_DEGREE = 60


@dataclass(frozen=True)
class GroebnerBasis:
    basis: tuple
    order: MonomialOrder
    ring: PolyRing

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def _divisors(self):
        out = []
        for g in self.basis:
            lm = g.leading_monomial(self.order)
            out.append((lm, g._terms[lm], g._terms))
        return out

    def normal_form(self, f: Polynomial) -> Polynomial:
        f._check_ring(self.ring)
        rem = _reduce_codes(f._terms, self._divisors(), self.order.key, self.ring.field)
        return Polynomial._make(self.ring, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(not any(m) for m in self.leading_monomials())

    def is_groebner(self) -> bool:
        """Every S-polynomial of a basis pair reduces to zero."""
        divs = self._divisors()
        key, field = self.order.key, self.ring.field
        for a, b in itertools.combinations(divs, 2):
            s = _s_poly(a, b, field)
            if _reduce_codes(s, divs, key, field):
                return False
        return True

    def is_reduced(self) -> bool:
        leads = self.leading_monomials()
        for i, g in enumerate(self.basis):
            if g._terms[leads[i]] != 1:
                return False
            for j, lm in enumerate(leads):
                if j != i and any(mono_divides(lm, m) for m in g._terms):
                    return False
        return True


def _s_poly(a, b, field):
    (lma, lca, ta), (lmb, lcb, tb) = a, b
    lcm = tuple(max(x, y) for x, y in zip(lma, lmb))
    sa = tuple(x - y for x, y in zip(lcm, lma))
    sb = tuple(x - y for x, y in zip(lcm, lmb))
    fa = field.cinv(lca)
    fb = field.cinv(lcb)
    cmul, csub = field.cmul, field.csub
    out = {}
    for m, v in ta.items():
        out[tuple(x + y for x, y in zip(m, sa))] = cmul(v, fa)
    for m, v in tb.items():
        mm = tuple(x + y for x, y in zip(m, sb))
        s = csub(out.get(mm, 0), cmul(v, fb))
        if s:
            out[mm] = s
        else:
            out.pop(mm, None)
    return out


def _monic_codes(terms: dict, key, field) -> tuple:
    lm = max(terms, key=key)
    inv = field.cinv(terms[lm])
    cmul = field.cmul
    return lm, {m: cmul(v, inv) for m, v in terms.items()}


def buchberger(
    gens,
    order: MonomialOrder = DEFAULT_ORDER,
    max_pairs: int = MAX_PAIRS,
    max_degree: int = MAX_PAIR_DEGREE,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Raises ResourceLimitError once more than ``max_pairs`` S-pairs have been
    examined or an S-pair lcm exceeds total degree ``max_degree``.  Zero
    generators do not change the ideal and are dropped.
    """
    gens = as_presentation(gens)
    order = MonomialOrder.parse(order)
    ring = gens.ring
    field = ring.field
    key = order.key

    G: list[dict] = []
    leads: list[Monomial] = []
    for g in gens.nonzero():
        lm, terms = _monic_codes(g._terms, key, field)
        G.append(terms)
        leads.append(lm)

    pairs = set(itertools.combinations(range(len(G)), 2))
    examined = 0

    def lcm_of(i, j):
        return tuple(max(x, y) for x, y in zip(leads[i], leads[j]))

    while pairs:
        i, j = min(pairs, key=lambda pr: (sum(lcm_of(*pr)), key(lcm_of(*pr)), pr))
        pairs.discard((i, j))
        examined += 1
        if examined > max_pairs:
            raise ResourceLimitError(f"Buchberger examined more than {max_pairs} S-pairs")
        lcm = lcm_of(i, j)
        if sum(lcm) > max_degree:
            raise ResourceLimitError(f"S-pair of degree {sum(lcm)} exceeds the cap {max_degree}")
        # first criterion: coprime leading monomials
        if all(x == 0 or y == 0 for x, y in zip(leads[i], leads[j])):
            continue
        # second (chain) criterion
        if any(
            k != i and k != j
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            and mono_divides(leads[k], lcm)
            for k in range(len(G))
        ):
            continue
        divs = [(lm, 1, t) for lm, t in zip(leads, G)]
        s = _s_poly((leads[i], 1, G[i]), (leads[j], 1, G[j]), field)
        r = _reduce_codes(s, divs, key, field)
        if r:
            lm, terms = _monic_codes(r, key, field)
            t = len(G)
            G.append(terms)
            leads.append(lm)
            pairs.update((k, t) for k in range(t))

    return GroebnerBasis(tuple(_reduce_basis(G, leads, ring, order)), order, ring)


def _reduce_basis(G, leads, ring, order):
    key, field = order.key, ring.field
    keep = []
    for i, lm in enumerate(leads):
        dominated = any(
            mono_divides(leads[j], lm) and (leads[j] != lm or j < i)
            for j in range(len(leads))
            if j != i
        )
        if not dominated:
            keep.append(i)
    reduced = []
    for i in keep:
        others = [(leads[j], 1, G[j]) for j in keep if j != i]
        terms = _reduce_codes(G[i], others, key, field)
        reduced.append(Polynomial._make(ring, terms))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    return reduced


@dataclass(frozen=True)
class Footprint:
    """Monomials divisible by no leading monomial of the ideal.

    ``monomials`` is the full set when ``finite``; for an infinite footprint it
    is ``None`` unless a degree bound was requested, in which case it holds the
    footprint monomials up to that degree.  ``obstructions`` are the minimal
    leading monomials.
    """

    finite: bool
    obstructions: tuple
    monomials: frozenset | None

    def __len__(self):
        if not self.finite:
            raise ValueError("footprint is infinite")
        return len(self.monomials)

    @property
    def size(self):
        return len(self.monomials) if self.finite else float("inf")

    def __contains__(self, m):
        return not any(mono_divides(o, m) for o in self.obstructions)


def _minimal(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(mono_divides(o, m) for o in out):
            out.append(m)
    return tuple(sorted(out))


def _monomials_up_to(nvars: int, bound: int):
    for d in range(bound + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            m = [0] * nvars
            for v in combo:
                m[v] += 1
            yield tuple(m)


def footprint(gb: GroebnerBasis, bound: int | None = None) -> Footprint:
    obstructions = _minimal(gb.leading_monomials())
    nvars = gb.ring.nvars
    box = [None] * nvars
    for o in obstructions:
        support = [i for i, x in enumerate(o) if x]
        if not support:
            box = [0] * nvars
            break
        if len(support) == 1:
            i = support[0]
            box[i] = o[i] if box[i] is None else min(box[i], o[i])
    finite = all(b is not None for b in box)
    if finite:
        candidates = itertools.product(*(range(b) for b in box))
    elif bound is not None:
        candidates = _monomials_up_to(nvars, bound)
    else:
        return Footprint(False, obstructions, None)
    mons = frozenset(m for m in candidates if not any(mono_divides(o, m) for o in obstructions))
    return Footprint(finite, obstructions, mons)


def quotient_dimension(gb: GroebnerBasis) -> int:
    return len(footprint(gb))


def reduced_footprint(gens, order: MonomialOrder = DEFAULT_ORDER) -> set:
    """Reduced monomials divisible by none of the generators' leading monomials.

    Uses the generators as given; no Gröbner basis is computed.
    """
    gens = require_nonzero(gens)
    order = MonomialOrder.parse(order)
    leads = [g.leading_monomial(order) for g in gens]
    ring = gens[0].ring
    return {m for m in reduced_monomials(ring) if not any(mono_divides(l, m) for l in leads)}


def ideal_member(f: Polynomial, gb: GroebnerBasis) -> bool:
    return gb.contains(f)


def augment_field_equations(gens) -> IdealPresentation:
    gens = as_presentation(gens)
    return IdealPresentation(gens.generators + tuple(field_equations(gens.ring)))


def augment_fermat(gens) -> IdealPresentation:
    gens = as_presentation(gens)
    return IdealPresentation(gens.generators + tuple(fermat_polynomials(gens.ring)))


def vanishing_ideal_basis(gens, order: MonomialOrder = DEFAULT_ORDER, **caps) -> GroebnerBasis:
    """Gröbner basis of ``<gens> + <x_i^q - x_i>``, the vanishing ideal of the rational zeros."""
    return buchberger(augment_field_equations(gens), order, **caps)


def vanishing_ideal_member(f: Polynomial, gens, order: MonomialOrder = DEFAULT_ORDER, **caps) -> bool:
    """Does ``f`` vanish on every F_q-rational common zero of ``gens``?

    Decided algebraically, as membership in ``<gens>`` plus the field equations.
    """
    return vanishing_ideal_basis(gens, order, **caps).contains(f)


def is_radical_witness(
    gens, candidate: Polynomial, power: int, order: MonomialOrder = DEFAULT_ORDER, **caps
) -> bool:
    """True iff ``candidate**power`` lies in ``<gens>`` but ``candidate`` does not."""
    if power < 1:
        raise ValueError("power must be at least 1")
    gb = buchberger(gens, order, **caps)
    return gb.contains(candidate**power) and not gb.contains(candidate)
