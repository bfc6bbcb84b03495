"""Acceptance gate: nine end-to-end criteria, each checked at full size.

Every criterion prints one PASS/FAIL line.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import itertools
import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import strategies as S  # noqa: E402
from ffnull import (  # noqa: E402
    MonomialOrder,
    PolyRing,
    Polynomial,
    affine_reduce,
    augment_fermat,
    buchberger,
    enumerate_affine_zeros,
    enumerate_projective_zeros,
    fermat_polynomials,
    field_equations,
    footprint,
    gamma_q_cofactors,
    ideal_member,
    indicator_polynomials,
    interpolation_basis,
    is_projectively_reduced,
    is_reduced,
    ore_bound_raw,
    projective_reduce,
    reduced_footprint,
    vanishes_on_affine_space,
    vanishes_on_projective_space,
    vanishing_ideal_basis,
    vanishing_ideal_member,
)
from ffnull.reduction import reduced_monomials  # noqa: E402
from ffnull.variety import projective_space_size  # noqa: E402

AFFINE_CONFIGS = [(q, n) for q in (2, 3, 4) for n in (1, 2, 3)]


def _random_combination(rng, ring, gens, max_deg):
    out = ring.zero
    for g in gens:
        out = out + S.random_poly(rng, ring, max_deg, 4) * g
    return out


# --- criteria ---

def criterion_1():
    """Direct sum: reduced output, exact cofactor identity, evaluation equality."""
    checked = 0
    for q, n in AFFINE_CONFIGS:
        R = PolyRing(S.FIELDS[q], n)
        pts = S.affine_points(R)
        eqs = field_equations(R)
        rng = S.seeded(1_000 + 10 * q + n)
        for _ in range(500):
            f = S.random_poly(rng, R, 2 * q, 10)
            g = affine_reduce(f).value
            if not is_reduced(g):
                return False, f"unreduced output for {f} (q={q}, n={n})"
            recon = g
            for c, e in zip(gamma_q_cofactors(f), eqs):
                recon = recon + c * e
            if recon != f:
                return False, f"cofactor identity fails for {f} (q={q}, n={n})"
            if any(S.naive_eval(f, pt) != S.naive_eval(g, pt) for pt in pts):
                return False, f"evaluation differs for {f} (q={q}, n={n})"
            checked += 1
    return True, f"{checked} polynomials over {len(AFFINE_CONFIGS)} configurations"


def criterion_2():
    """Vanishing on affine space agrees with exhaustive evaluation."""
    total = members = 0
    for q, n in AFFINE_CONFIGS:
        R = PolyRing(S.FIELDS[q], n)
        pts = S.affine_points(R)
        eqs = field_equations(R)
        rng = S.seeded(2_000 + 10 * q + n)
        for i in range(500):
            if i < 50:
                f = _random_combination(rng, R, eqs, q)
            else:
                f = S.random_poly(rng, R, 2 * q, 10)
            truth = S.vanishes_everywhere(f, pts)
            if vanishes_on_affine_space(f) != truth:
                return False, f"disagreement on {f} (q={q}, n={n})"
            if i < 50 and not truth:
                return False, f"constructed member {f} does not vanish (q={q}, n={n})"
            members += truth
            total += 1
    return True, f"{total} polynomials, {members} vanishing"


def _ideal_instances():
    """The shared instances for criteria 3-5: (q, gens, test polynomials)."""
    out = []
    for q in (2, 3):
        R = PolyRing(S.FIELDS[q], 2)
        eqs = field_equations(R)
        rng = S.seeded(3_000 + q)
        made = 0
        while made < 50:
            gens = [S.random_poly(rng, R, 3, 4) for _ in range(rng.randint(1, 2))]
            gens = [g for g in gens if g]
            if not gens:
                continue
            made += 1
            zeros = enumerate_affine_zeros(gens)
            g_ind, _ = indicator_polynomials(gens)
            interp = interpolation_basis(zeros) if len(zeros) else []
            tests = []
            for k in range(100):
                kind = k % 5
                if kind in (0, 1):
                    f = S.random_poly(rng, R, 4, 6)
                elif kind == 2:
                    f = S.random_poly(rng, R, 2, 3) * g_ind
                elif kind == 3:
                    f = _random_combination(rng, R, gens, 2) + _random_combination(rng, R, eqs, 1)
                else:
                    # subtract the interpolant of f on Z, leaving a function that vanishes on Z
                    f = S.random_poly(rng, R, 4, 6)
                    for a, p in zip(zeros.codes, interp):
                        f = f - p.scale(R.field.from_code(f.eval_codes(a)))
                tests.append(f)
            out.append((q, R, gens, zeros, tests))
    return out


_INSTANCES = None


def _instances():
    global _INSTANCES
    if _INSTANCES is None:
        _INSTANCES = _ideal_instances()
    return _INSTANCES


def criterion_3():
    """Membership in I + field equations iff vanishing on the enumerated zero set."""
    agree = positives = 0
    for q, R, gens, zeros, tests in _instances():
        for f in tests:
            truth = S.vanishes_everywhere(f, zeros.codes)
            if vanishing_ideal_member(f, gens) != truth:
                return False, f"disagreement: f={f}, gens={[str(g) for g in gens]} (q={q})"
            agree += 1
            positives += truth
    return True, f"{agree} tests on {len(_instances())} ideals, {positives} members"


def criterion_4():
    """Radicality: f^q in I + field equations forces f in it."""
    powers_in = 0
    for q, R, gens, zeros, tests in _instances():
        gb = vanishing_ideal_basis(gens)
        for f in tests:
            if gb.contains(f**q):
                powers_in += 1
                if not gb.contains(f):
                    return False, f"non-radical witness f={f}, gens={[str(g) for g in gens]} (q={q})"
    return True, f"{powers_in} cases with f^q in the ideal, 0 counterexamples"


def criterion_5():
    """|Z| = |footprint of GB(I + field equations)| <= |reduced footprint of gens|, all orders."""
    checks = 0
    for q, R, gens, zeros, tests in _instances():
        exact = len(S.common_zeros(gens, S.affine_points(R)))
        if exact != len(zeros):
            return False, f"enumeration disagrees with oracle for {[str(g) for g in gens]}"
        for order in MonomialOrder:
            fp = footprint(vanishing_ideal_basis(gens, order))
            bar = reduced_footprint(gens, order)
            if not fp.finite or len(fp) != exact:
                return False, f"|footprint| != |Z| for {[str(g) for g in gens]} ({order.value})"
            if len(bar) < exact:
                return False, f"reduced footprint below |Z| for {[str(g) for g in gens]} ({order.value})"
            checks += 1
    return True, f"{checks} (instance, order) chains"


def criterion_6():
    """Ore's inequality, its equality witnesses, and the product-count inequality."""
    exhaustive = 0
    for q in (2, 3, 5):
        R = PolyRing(S.FIELDS[q], 2)
        monos = S.monomials_up_to(2, 2)
        F = R.field
        for coeffs in itertools.product(range(q), repeat=len(monos)):
            if not any(coeffs):
                continue
            f = Polynomial(R, {m: F.from_code(c) for m, c in zip(monos, coeffs) if c})
            count = len(enumerate_affine_zeros([f]))
            if count > f.degree * q:
                return False, f"Ore fails for {f} over F_{q}"
            exhaustive += 1
    sampled = 0
    for q in (5, 7):
        R = PolyRing(S.FIELDS[q], 2)
        rng = S.seeded(6_000 + q)
        for d in (3, 4):
            if d >= q:
                continue
            sampled_here = 0
            while sampled_here < 300:
                f = S.random_poly(rng, R, d, 8)
                if not f or f.degree != d:
                    continue
                if len(enumerate_affine_zeros([f])) > ore_bound_raw(f):
                    return False, f"Ore fails for {f} over F_{q}"
                sampled_here += 1
            sampled += sampled_here
    witnesses = 0
    for q in (2, 3, 4, 5, 7):
        F = S.FIELDS[q]
        for n in (1, 2, 3):
            R = PolyRing(F, n)
            x1 = R.gens[0]
            for d in range(1, q):
                f = R.one
                for c in range(d):
                    f = f * (x1 - R.constant(F.from_code(c)))
                if len(enumerate_affine_zeros([f])) != d * q ** (n - 1) or ore_bound_raw(f) != d * q ** (n - 1):
                    return False, f"equality witness fails: d={d}, q={q}, n={n}"
                witnesses += 1
    products = 0
    for q in (2, 3, 4, 5):
        for n in (1, 2, 3):
            for exps in itertools.product(range(q), repeat=n):
                lhs = 1
                for i in exps:
                    lhs *= q - i
                if lhs < q**n - sum(exps) * q ** (n - 1):
                    return False, f"product inequality fails for {exps}, q={q}"
                products += 1
    return True, (
        f"{exhaustive} exhaustive, {sampled} sampled, {witnesses} equality witnesses, "
        f"{products} product checks"
    )


def criterion_7():
    """Projective engine: reduced, degree-preserving, evaluation-equal; vanishing test exact."""
    total = 0
    for q in (2, 3):
        for n in (1, 2):
            P = PolyRing(S.FIELDS[q], n, projective=True)
            pts = S.projective_points(P)
            ferm = fermat_polynomials(P)
            for g in ferm:
                if not projective_reduce(g).value.is_zero():
                    return False, f"Fermat generator {g} does not reduce to 0"
            rng = S.seeded(7_000 + 10 * q + n)
            for i in range(500):
                d = rng.randint(0, q + 2)
                if i < 50 and d >= q + 1:
                    f = P.zero
                    for g in ferm:
                        f = f + S.random_homogeneous(rng, P, d - (q + 1), 3) * g
                else:
                    f = S.random_homogeneous(rng, P, d, 8)
                g = projective_reduce(f).value
                if not is_projectively_reduced(g):
                    return False, f"unreduced output for {f}"
                if g and (not g.is_homogeneous() or g.degree != d):
                    return False, f"degree changed for {f}"
                if any(S.naive_eval(f, pt) != S.naive_eval(g, pt) for pt in pts):
                    return False, f"evaluation differs for {f}"
                if vanishes_on_projective_space(f) != S.vanishes_everywhere(f, pts):
                    return False, f"vanishing test wrong for {f}"
                total += 1
    return True, f"{total} homogeneous polynomials"


def criterion_8():
    """Non-radical projective example: x0^(q+1) is a member, x0 is not."""
    for q in (2, 3):
        P = PolyRing(S.FIELDS[q], 1, projective=True)
        f = P.parse(f"x0^{q}*x1 - x0*x1^{q} + x0^{q + 1}")
        gb = buchberger(augment_fermat([f]))
        if not ideal_member(P.parse(f"x0^{q + 1}"), gb):
            return False, f"x0^{q + 1} not found in the ideal (q={q})"
        if ideal_member(P.parse("x0"), gb):
            return False, f"x0 wrongly in the ideal (q={q})"
    return True, "q=2 and q=3 reproduce the non-radical behaviour"


def criterion_9():
    """Counting: q^n reduced monomials, (q^(n+1)-1)/(q-1) projective points."""
    for q in (2, 3, 4):
        for n in (1, 2, 3):
            R = PolyRing(S.FIELDS[q], n)
            brute = [m for m in S.monomials_up_to(n, n * q) if all(x < q for x in m)]
            if len(reduced_monomials(R)) != q**n or len(brute) != q**n:
                return False, f"reduced monomial count wrong for q={q}, n={n}"
            P = PolyRing(S.FIELDS[q], n, projective=True)
            expected = (q ** (n + 1) - 1) // (q - 1)
            listed = enumerate_projective_zeros([], P)
            if len(listed) != expected or len(S.projective_points(P)) != expected:
                return False, f"|P^{n}(F_{q})| wrong"
            if projective_space_size(q, n) != expected:
                return False, f"projective_space_size({q}, {n}) wrong"
    return True, "q in {2,3,4}, n in {1,2,3}"


CRITERIA = [
    (1, "direct-sum decomposition", criterion_1, 30),
    (2, "affine vanishing test", criterion_2, None),
    (3, "membership in I + field equations", criterion_3, 300),
    (4, "radicality of I + field equations", criterion_4, None),
    (5, "footprint chain", criterion_5, None),
    (6, "Ore inequality", criterion_6, None),
    (7, "projective engine", criterion_7, None),
    (8, "non-radical projective example", criterion_8, 10),
    (9, "counting sanity", criterion_9, None),
]


def evaluate(number):
    _, name, fn, limit = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; took {elapsed:.1f}s, limit {limit}s"
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number} ({name}): {detail} [{elapsed:.2f}s]"
    return ok, line


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
