"""Exact verification of Cauchy-Schwarz-type inequalities for functions
satisfying Levi-Civita-type functional equations.

The public surface re-exports the most used names from the submodules.
"""

__version__ = "0.1.0"

from .algebra import (
    GaussianRational,
    PolyQ,
    QuadElem,
    is_valid_radicand,
    poly_derivative,
    poly_eval,
    quad_mul,
    quad_sign,
    sqrt_convergents,
    sqrt_within,
)
from .constructions import (
    AdditiveMap,
    analytic_pair,
    ClassTag,
    Classification,
    DiscontinuityWitness,
    classify_additive,
    counterexample_functions,
    derivation_witness,
    discontinuity_witness,
    gaussian_re_im,
    in_R_A,
    make_additive_quad,
    thmB_pair,
)
from .core import (
    Carrier,
    CarrierFunction,
    LeviCivitaRep,
    RepKind,
    check_decomposition,
    gaussian_carrier,
    polyq_carrier,
    quad_carrier,
    rational_carrier,
    reals_interval_carrier,
    rep_rhs,
)
from .errors import (
    CarrierMismatchError,
    DomainError,
    HypothesisViolation,
    LeviCivitaError,
    PrecisionError,
    UnsupportedCarrierError,
)
from .inequalities import (
    check_additivity,
    check_chain_paired_difference,
    check_chain_paired_sum,
    check_cs_forward,
    check_cs_reverse,
    check_discriminant_A9,
    check_hyperbolic_gap,
    check_identity,
    check_unit_bound,
)
from .intervals import RationalInterval, enclose_analytic
from .reports import CheckReport, Counterexample, Verdict
from .search import (
    EquivalenceReport,
    SampleSpec,
    equivalence_check_thm1,
    equivalence_check_thm2,
    random_additive_maps,
    sample_elements,
    sample_pairs,
    search_counterexample,
)
