"""Exact complexity analysis and bound certification for Boolean functions."""

from .bf import (
    ArityError,
    BooleanFunction,
    MultilinearPolynomial,
    PartialAssignment,
    family,
    kushilevitz_polynomial,
)
from .bounds import (
    BoundGrid,
    CapProfile,
    cap_profile,
    cs_harmonic_bound,
    cs_sens_bound,
    dp_degree,
    dp_mixed_ds,
    dp_monotone_degree,
    ds_influence_min,
    markov_cap,
    monotone_dt_table,
    power_tail,
    technical_recursion,
)
from .coordinate import (
    CERT_I,
    DEG_I,
    SENS_I,
    CoordinateMeasureKind,
    PotentialValue,
    cert_i,
    check_influence_bound,
    check_junta_count,
    check_monomial_sensitivity,
    check_restriction_inequality,
    check_rrcm,
    check_split_bound,
    deg_i,
    mix_cs,
    mix_ds,
    potential,
    restricted_potential,
    sens_i,
)
from .corpus import Corpus, enumerate_monotone, parse_corpus, random_monotone
from .lp import (
    LinearProgram,
    SimplexResult,
    adeg_lp,
    lp_bs_cap,
    moment_lp,
    simplex_feasible,
)
from .measures import (
    MeasureReport,
    approx_degree,
    block_sensitivity,
    certificate_complexity,
    degree,
    dt_depth,
    influence,
    measure_report,
    sensitivity,
)
from .verify import (
    TheoremCheck,
    certify_doubling_recurrence,
    check_dt_intersect,
    check_influence_restriction_average,
    check_markov_consequence,
    check_standard_form_lemmas,
    dt_doubling_family,
    run_theorem_suite,
    standard_form,
    suite_failures,
    symmetrize,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
