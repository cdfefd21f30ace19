"""Constant terms of Laurent polynomial powers: ghost-term decompositions,
Dwork-type congruences mod p**s, and p-adic unit roots for the Apery family.
"""

from .apery import APERY_POLY_SRC, apery_numbers, apery_numbers_mod, apery_polynomial
from .congruence import (
    CongruenceReport,
    NotAdmissibleError,
    check_c1,
    check_c2,
    check_dig2,
    check_digit_product,
    f_trunc,
    run_lemma_suite,
)
from .ghost import (
    GhostCalculator,
    c_direct,
    c_from_b,
    c_from_b_sequence,
    concat_p,
    digit_partitions,
    digits_p,
    enumerate_indecomposable,
    enumerate_tuples,
    ghost_decomposition_residual,
    ghost_term,
    indecomposable_sum,
    is_indecomposable,
    length_p,
    reconstruct_b,
    tuple_ghost_product,
)
from .laurent import (
    LaurentPoly,
    PowerCache,
    TruncSeries,
    constant_term_of_product,
    constant_term_sequence,
)
from .padic import PadicInt, hensel_quadratic_unit_root, is_prime, teichmuller
from .polyparse import ParseError, parse_poly
from .polytope import (
    AdmissibilityReport,
    LatticePolytope,
    is_admissible,
    newton_polytope,
)
from .unitroot import (
    FqField,
    PlaneCubic,
    ZetaReport,
    a_p,
    apery_fiber,
    count_projective_points,
    dwork_domain_test,
    finite_field,
    is_smooth_cubic,
    omega_approx,
    smallest_irreducible,
    unit_root_compare,
    unit_root_sweep,
)

__version__ = "0.1.0"
