"""Apparent distance, minimum apparent distance and true-distance constructions for abelian codes."""

from .apparent import (
    ApparentReport,
    MadTrace,
    SupportHypermatrix,
    afforded,
    apparent_value,
    bmad,
    bmad_bruteforce,
    from_orbit_reps,
    hyper_apparent,
    involved_set,
    pattern_of,
    vec_apparent,
)
from .bounds import BCH, HT, BoundSet, bch_optimal, bound_set, bound_set_eval, ht_optimal
from .codes import (
    AbelianCode,
    RootSelection,
    code_apparent,
    code_apparent_at,
    code_with_nonzeros,
    defining_set_of,
    dimension,
    make_code,
)
from .construct import (
    BchSpec,
    Construction,
    ConstructionError,
    bch_defining_set,
    bch_spec_from_factors,
    certify_with_witness,
    check_condition_imposed,
    construct_true_distance_code,
    factor_abF,
    is_cp_matrix,
    prune_defining_set,
    rational_shift,
    recognize_bivariate_bch,
    verify_true_distance,
)
from .gfield import FieldCtx, FieldElement, FieldError, make_context, primitive_root
from .oracle import generator_basis, min_distance_bruteforce, weight_distribution
from .orbits import OrbitSet, cyclotomic_coset, orbit_closure, q_orbit
from .transform import MultiPoly, dft, from_terms, idft, outer

__version__ = "0.1.0"
