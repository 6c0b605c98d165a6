"""Continuants and sums of squares.

Exact arithmetic over Z, Q, F_p, polynomial rings, the Gaussian, Eisenstein
and Z[sqrt 3] integers, and 2x2 integer matrices.  Continuants drive the
Euclidean reconstruction of two-square and Hermitian representations.
"""

from .continuants import (
    QuotientSeq,
    bezout_from_quotients,
    continuant,
    continuant_euler,
    continuant_matrix,
    determinant,
    is_quasi_palindromic,
    zigzag_rescale,
)
from .errors import ContrepsError, DomainError, InvariantViolation, ParseError
from .euclid import EuclidTrace, coprime, euclid_until, euclidean_algorithm, gcd, reconstruct
from .hermitian import (
    DescentChain,
    Exact,
    Form,
    FormQuadruple,
    Multiplier,
    StarRep,
    chain_to_rep,
    descent_chain,
    eisenstein_form,
    eisenstein_to_x2_3y2,
    find_star_multiplier,
    form_x2_3y2,
    four_squares,
    product_formula,
    reduce_mod,
    sqrt3_form,
    theorem1_multiplier,
)
from .rings import (
    GF,
    M2,
    QQ,
    ZI,
    ZS,
    ZW,
    ZZ,
    Elem,
    PolyRing,
    QuadExt,
    Ring,
    conjugate,
    euclidean_divide,
    euclidean_norm,
    format_value,
    is_unit,
    parse_ring,
    parse_value,
    star_norm,
)
from .two_squares import (
    TwoSquaresRep,
    brillhart_two_squares,
    cyclotomic_rep,
    gaussian_two_squares,
    multiplier_from_representation,
    poly_two_squares,
    poly_two_squares_gcd,
    smith_two_squares,
    split_when_i_exists,
    sqrt_minus_one_mod_p,
    unit_absorb,
    verify_two_squares,
)

__version__ = "0.1.0"
