"""Command-line front end.

Exit codes: 0 success, 2 bad input, 3 internal invariant violation,
4 resource limit (Buchberger caps or enumeration cap).

Examples::

    ffnull reduce --q 2 --n 1 "x1^2"
    ffnull vanish --q 2 --n 1 --projective "x0^2*x1 + x0*x1^2"
    ffnull member --q 2 --n 2 --ideal "x1 + x2" "x1*x2 + x1"
    ffnull bounds --q 3 --n 2 "x1 - x2" --json
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .errors import FFNullError, InputError, NotHomogeneousError, PolySyntaxError, ResourceLimitError
from .field import FieldSpec, field_make, is_prime, prime_power
from .groebner import (
    augment_fermat,
    augment_field_equations,
    buchberger,
    footprint,
    reduced_footprint,
    vanishing_ideal_basis,
)
from .parsing import parse_expression
from .polyring import IdealPresentation, MonomialOrder, PolyRing
from .reduction import (
    affine_reduce,
    fermat_cofactors,
    fermat_pairs,
    gamma_q_cofactors,
    projective_reduce,
)
from .variety import (
    enumerate_affine_zeros,
    enumerate_projective_zeros,
    find_nonvanishing_point,
    ore_bound,
    ore_bound_raw,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3
EXIT_RESOURCE = 4


class InvariantViolation(FFNullError):
    pass


@dataclass(frozen=True)
class JobSpec:
    field: FieldSpec
    nvars: int
    mode: str  # "affine" | "projective"
    order: MonomialOrder
    payload: tuple  # polynomial texts
    output: str  # "text" | "json"
    ideal: tuple = ()
    cofactors: bool = False
    field_equations: bool = False

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.field, self.nvars, projective=self.mode == "projective")


def parse_q(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*", text)
    if m is None:
        raise InputError(f"cannot read field order {text!r}; expected Q or P^E")
    if m.group(2) is None:
        return prime_power(int(m.group(1)))
    p, e = int(m.group(1)), int(m.group(2))
    if not is_prime(p):
        raise InputError(f"{p} in --q {text} is not prime")
    return p, e


def parse_modulus(text: str, p: int) -> tuple[int, ...]:
    """Read a monic polynomial in ``t`` over F_p into ascending coefficients."""
    ring = PolyRing(field_make(p), 1)

    def number(n, pos):
        if n >= p:
            raise PolySyntaxError(f"coefficient {n} is not in F_{p}", pos, text)
        return ring.constant(n)

    def symbol(name, pos):
        if name != "t":
            raise PolySyntaxError(f"unknown symbol {name!r} in modulus", pos, text)
        return ring.var(1)

    poly = parse_expression(text, number, symbol)
    deg = poly.degree if poly else 0
    coeffs = [0] * (deg + 1)
    for (k,), c in poly.codes().items():
        coeffs[k] = c
    return tuple(coeffs)


def _diagnostic(exc: Exception) -> str:
    if isinstance(exc, PolySyntaxError) and exc.text:
        tok = exc.text[exc.position:].split()[0] if exc.text[exc.position:].strip() else "<end>"
        return f"error: {exc} (near {tok!r} in {exc.text!r})"
    return f"error: {exc}"


def _field_json(field: FieldSpec) -> dict:
    modulus = field.modulus_text if field.e > 1 else None
    return {"p": field.p, "e": field.e, "modulus": modulus}


def _point_text(pt) -> str:
    return ",".join(str(a) for a in pt)


def _polys(job: JobSpec, texts, what="polynomial"):
    ring = job.ring
    polys = [ring.parse(t) for t in texts]
    if job.mode == "projective":
        for t, f in zip(texts, polys):
            if not f.is_homogeneous():
                raise NotHomogeneousError(f"{what} {t!r} is not homogeneous")
    return polys


def _single(job: JobSpec):
    if len(job.payload) != 1:
        raise InputError("this command takes exactly one polynomial")
    return _polys(job, job.payload)[0]


def cmd_reduce(job: JobSpec) -> tuple[dict, list[str]]:
    f = _single(job)
    if job.mode == "projective":
        value = projective_reduce(f, job.order).value
        labels = [f"x{i}*x{j}" for i, j in fermat_pairs(job.ring)]
        cofs = fermat_cofactors(f, job.order) if job.cofactors else None
    else:
        value = affine_reduce(f, job.order).value
        labels = [f"x{i + 1}" for i in range(job.ring.nvars)]
        cofs = gamma_q_cofactors(f, job.order) if job.cofactors else None
    result = {"result": value.format(job.order), "witness": None}
    lines = [value.format(job.order)]
    if cofs is not None:
        result["cofactors"] = {lab: c.format(job.order) for lab, c in zip(labels, cofs)}
        lines += [f"cofactor[{lab}]: {c.format(job.order)}" for lab, c in zip(labels, cofs)]
    return result, lines


def cmd_vanish(job: JobSpec):
    f = _single(job)
    if job.mode == "projective":
        vanishes = projective_reduce(f, job.order).value.is_zero()
    else:
        vanishes = affine_reduce(f, job.order).value.is_zero()
    witness = None
    if not vanishes:
        witness = find_nonvanishing_point(f)
        if witness is None:
            raise InvariantViolation(f"nonzero normal form but {f} vanishes at every point")
    lines = [f"vanishes: {str(vanishes).lower()}"]
    if witness is not None:
        lines.append(f"witness: {_point_text(witness)}")
    return {"result": vanishes, "witness": None if witness is None else [str(a) for a in witness]}, lines


def cmd_points(job: JobSpec):
    gens = _polys(job, job.payload)
    if job.mode == "projective":
        pts = enumerate_projective_zeros(gens, job.ring)
    else:
        pts = enumerate_affine_zeros(gens, job.ring)
    rows = [[str(a) for a in pt] for pt in pts]
    lines = [f"count: {len(pts)}"] + [",".join(r) for r in rows]
    return {"result": {"count": len(pts), "points": rows}, "witness": None}, lines


def cmd_member(job: JobSpec):
    f = _single(job)
    if not job.ideal:
        raise InputError("member needs at least one --ideal generator")
    gens = IdealPresentation(tuple(_polys(job, job.ideal, "ideal generator")))
    if job.mode == "projective":
        gb = buchberger(augment_fermat(gens), job.order)
    else:
        gb = vanishing_ideal_basis(gens, job.order)
    member = gb.contains(f)
    return {"result": member, "witness": None}, [f"member: {str(member).lower()}"]


def cmd_bounds(job: JobSpec):
    if job.mode == "projective":
        raise InputError("bounds is only defined in affine mode")
    gens = _polys(job, job.payload)
    exact = len(enumerate_affine_zeros(gens, job.ring))
    fp_bound = len(reduced_footprint(gens, job.order))
    quotient_dim = len(footprint(vanishing_ideal_basis(gens, job.order)))
    ore = min(ore_bound(g) for g in gens)
    ore_raw = min(ore_bound_raw(g) for g in gens)
    result = {
        "exact": exact,
        "quotient_dimension": quotient_dim,
        "footprint_bound": fp_bound,
        "ore": ore,
        "ore_raw": ore_raw,
    }
    violations = []
    if quotient_dim != exact:
        violations.append(f"quotient dimension {quotient_dim} != exact count {exact}")
    if exact > fp_bound:
        violations.append(f"exact count {exact} exceeds footprint bound {fp_bound}")
    if exact > ore_raw:
        violations.append(f"exact count {exact} exceeds Ore bound {ore_raw}")
    result["violations"] = violations
    lines = [f"{k}: {v}" for k, v in result.items() if k != "violations"]
    lines.append("violations: " + ("; ".join(violations) if violations else "none"))
    return {"result": result, "witness": None}, lines


def cmd_gb(job: JobSpec):
    gens = IdealPresentation(tuple(_polys(job, job.payload)))
    if job.field_equations:
        gens = augment_fermat(gens) if job.mode == "projective" else augment_field_equations(gens)
    gb = buchberger(gens, job.order)
    fp = footprint(gb)
    basis = [g.format(job.order) for g in gb]
    size = len(fp) if fp.finite else None
    lines = basis + [f"footprint: {size if fp.finite else 'infinite'}"]
    return {"result": {"basis": basis, "footprint": size}, "witness": None}, lines


COMMANDS = {
    "reduce": cmd_reduce,
    "vanish": cmd_vanish,
    "points": cmd_points,
    "member": cmd_member,
    "bounds": cmd_bounds,
    "gb": cmd_gb,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", required=True, help="field order, as Q or P^E")
    common.add_argument("--n", required=True, type=int, help="affine dimension (projective rings get x0..xn)")
    common.add_argument("--projective", action="store_true", help="work in P^n with variables x0..xn")
    common.add_argument("--order", default="grevlex", choices=[o.value for o in MonomialOrder])
    common.add_argument("--modulus", help="irreducible modulus in t, e.g. 't^2+t+1'")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="ffnull", description="vanishing ideals and rational points over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("reduce", parents=[common], help="normal form modulo field equations / Fermat ideal")
    p.add_argument("poly")
    p.add_argument("--cofactors", action="store_true", help="also print the generator cofactors")
    p = sub.add_parser("vanish", parents=[common], help="does f vanish on all of A^n(F_q) / P^n(F_q)?")
    p.add_argument("poly")
    p = sub.add_parser("points", parents=[common], help="enumerate rational common zeros")
    p.add_argument("polys", nargs="*")
    p = sub.add_parser("member", parents=[common], help="membership in I + field equations")
    p.add_argument("--ideal", action="append", default=[], help="ideal generator (repeatable)")
    p.add_argument("poly")
    p = sub.add_parser("bounds", parents=[common], help="exact count vs footprint and Ore bounds")
    p.add_argument("polys", nargs="+")
    p = sub.add_parser("gb", parents=[common], help="reduced Gröbner basis and footprint size")
    p.add_argument("polys", nargs="+")
    p.add_argument("--field-equations", action="store_true", help="adjoin the field equations first")
    return parser


def _job_from_args(args) -> JobSpec:
    p, e = parse_q(args.q)
    modulus = parse_modulus(args.modulus, p) if args.modulus else None
    if args.n < 0:
        raise InputError("--n must be nonnegative")
    payload = (args.poly,) if hasattr(args, "poly") else tuple(args.polys)
    return JobSpec(
        field=field_make(p, e, modulus),
        nvars=args.n,
        mode="projective" if args.projective else "affine",
        order=MonomialOrder.parse(args.order),
        payload=payload,
        output="json" if args.json else "text",
        ideal=tuple(getattr(args, "ideal", ())),
        cofactors=getattr(args, "cofactors", False),
        field_equations=getattr(args, "field_equations", False),
    )


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        job = _job_from_args(args)
        result, lines = COMMANDS[args.command](job)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=stderr)
        return EXIT_INVARIANT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (InputError, FFNullError) as exc:
        print(_diagnostic(exc), file=stderr)
        return EXIT_INPUT
    code = EXIT_OK
    if args.command == "bounds" and result["result"]["violations"]:
        code = EXIT_INVARIANT
    if job.output == "json":
        doc = {"command": args.command, "field": _field_json(job.field)}
        doc.update(result)
        print(json.dumps(doc, sort_keys=True), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return code


def main(argv=None) -> int:
    return run(argv)
