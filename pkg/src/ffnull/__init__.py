"""Vanishing ideals and rational points over finite fields.

Exact arithmetic in F_q, sparse polynomials, normal forms modulo the field
equations (affine) and the Fermat polynomials (projective), Gröbner bases and
footprints, exhaustive rational-point enumeration, and point-count bounds.
"""

from .errors import *  # noqa: F401,F403
from .field import FieldElement, FieldSpec, field_arith, field_enumerate, field_from_order, field_make
from .groebner import (
    Footprint,
    GroebnerBasis,
    augment_fermat,
    augment_field_equations,
    buchberger,
    footprint,
    ideal_member,
    is_radical_witness,
    quotient_dimension,
    reduced_footprint,
    vanishing_ideal_basis,
    vanishing_ideal_member,
)
from .polyring import (
    MINUS_INFINITY,
    IdealPresentation,
    MonomialOrder,
    Polynomial,
    PolyRing,
    leading_monomial,
    poly_arith,
    poly_divmod,
    poly_eval,
    poly_parse,
    poly_print,
)
from .reduction import (
    AffineReducedForm,
    ProjectiveReducedForm,
    affine_reduce,
    fermat_cofactors,
    fermat_polynomials,
    field_equations,
    gamma_q_cofactors,
    is_projectively_reduced,
    is_reduced,
    projective_reduce,
    vanishes_on_affine_space,
    vanishes_on_projective_space,
)
from .variety import (
    AffinePointSet,
    ProjectivePointSet,
    enumerate_affine_zeros,
    enumerate_projective_zeros,
    find_nonvanishing_point,
    footprint_bound,
    indicator_polynomials,
    interpolation_basis,
    ore_bound,
    ore_bound_raw,
)

__version__ = "0.1.0"
