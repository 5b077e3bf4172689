"""Exact root data, Clifford classification and super Weyl characters for
quasireductive supergroups (GL(m|n), Q(n), P(n))."""

from .characters import (
    SuperCharacterReport,
    even_character,
    gl_super_character,
    induced_dim_bound,
    maximal_weight_check,
    odd_factor,
    periplectic_variants,
    schur,
    super_character,
    super_character_rho_form,
    weyl_dimension,
    weyl_numerator,
)
from .clifford import (
    CliffordClassification,
    MatrixRep,
    QuadraticSpace,
    brute_force_classify,
    classify,
    construct_rep,
    diagonalize,
    gram_from_weight,
)
from .fields import AlgebraicallyClosed, PrimeField, Rationals, parse_field
from .laurent import CharacterPoly, HalfWeight, add, coefficient, dim_eval, exact_divide, mono, mul
from .rootdata import (
    GammaFunctional,
    PolarizedDatum,
    RootDatum,
    admits_distinguished_parabolic,
    build_group,
    in_lambda_plus_p,
    is_dominant,
    leq,
    polarize,
    weyl_elements,
)

__version__ = "0.1.0"
