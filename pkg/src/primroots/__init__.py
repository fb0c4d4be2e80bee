"""Primitive roots, Dirichlet characters and truncated L-series modulo primes."""

from .arithmetic import (
    EULER_GAMMA,
    MERTENS_B1,
    FactoredInteger,
    OmegaStatsRow,
    euler_phi,
    factor,
    is_prime,
    mobius,
    omega,
    omega_average,
    prime_sieve,
    von_mangoldt,
)
from .characters import (
    Character,
    PrimeModulus,
    character_eval,
    character_orthogonality_check,
    characters_of_order,
    discrete_log,
    least_prime_primitive_root,
    least_primitive_root,
    least_quadratic_nonresidue,
    legendre_symbol,
    multiplicative_order,
    psi_char_sum,
    psi_direct,
)
from .errors import (
    BudgetExceeded,
    DecompositionMismatch,
    NumericalDrift,
    PrimRootsError,
    SearchCapExceeded,
)
from .lseries import (
    PartialSumReport,
    chebyshev_psi_chi,
    decomposition_check,
    kappa2,
    nonprincipal_partial_sum,
    principal_partial_sum,
    weighted_psi_lambda_sum,
    zeta_log_derivative_at_2,
)
from .survey import (
    SurveyRecord,
    SurveySummary,
    average_nres,
    is_exceptional,
    omega_exponent_scan,
    survey_range,
    verify_bound_case1,
    verify_bound_case2,
    write_csv,
)

__version__ = "0.1.0"
