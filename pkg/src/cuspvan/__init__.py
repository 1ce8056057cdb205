"""Vanishing orders of newforms at the cusps of X_0(N) from local data.

The pipeline: characters of Q_p^x (padic_chars), Gauss sums and epsilon
factors (gauss_eps), local representation descriptors with the closed-form
vanishing table and its character-search oracle (local_reps), numerical
Whittaker newform reconstruction (whittaker_eval), cusp bookkeeping
(cusps), the global product layer (global_forms), and the verification
harness (verify_suites, cli).
"""

from .cusps import (
    Cusp,
    ScalingMatrix,
    are_equivalent,
    cusp_count,
    cusps_of_denominator,
    delta,
    euler_phi,
    scaling_matrix,
    width,
)
from .errors import (
    AmbiguousBound,
    BadMatrix,
    CuspvanError,
    DomainError,
    DomainMismatch,
    InternalInconsistency,
    InvalidDescriptor,
    InvalidPrime,
    LevelOutOfRange,
    NotADivisor,
    NotElliptic,
    Unsupported,
    UnsupportedLevel,
    WindowError,
)
from .gauss_eps import (
    classify_gauss,
    epsilon_factor,
    epsilon_gl1,
    gauss_sum,
    psi,
    zeta_local,
)
from .global_forms import (
    BrunaultReport,
    CuspVanishingReport,
    NewformLocalData,
    Rationality,
    brunault_checks,
    e_f,
    elliptic_local_profiles,
    elliptic_ramification,
    fourier_at_cusp,
    newform_from_json,
    newform_to_json,
)
from .local_reps import (
    AbstractLocalData,
    PrincipalSeries,
    SteinbergTwist,
    Supercuspidal,
    abstract_profile,
    central_char_conductor,
    classify,
    conductor,
    contragredient,
    d_pi,
    descriptor_from_json,
    descriptor_to_json,
    is_minimal,
    normalize_unramified_twist,
    toral_whittaker,
    twist_conductor,
    vanishing_index_oracle,
    vanishing_index_table,
)
from .padic_chars import (
    PadicCharacter,
    char_from_json,
    char_inv,
    char_mul,
    char_to_json,
    enumerate_chars,
    evaluate,
    lift,
    reduce_to_conductor,
    trivial_char,
    unit_group_structure,
    unit_rotation,
)
from .padic_chars import conductor as char_conductor
from .tolerances import DEFAULT_TOL, zero_tol
from .verify_suites import SUITES, SuiteResult, run_suites
from .whittaker_eval import (
    WhittakerTable,
    c_table,
    vanishing_index_definitional,
    whittaker_value,
)

__version__ = "0.1.0"
