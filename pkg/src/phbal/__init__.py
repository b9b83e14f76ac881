"""Balanced truncation of continuous-time LTI systems with generalized and
extended Gramian certificates, port-Hamiltonian structure preservation, and
a-priori error bounds."""

from . import errors
from .analysis import (
    DissipationProbe,
    Trajectory,
    dissipation_probe,
    error_system,
    hinf_norm,
    l2_gain_estimate,
    make_signal,
    parse_signal_spec,
    simulate,
)
from .balancing import (
    BalancedRealization,
    ErrorCertificate,
    balance_pair,
    error_bound,
    transform,
    truncate,
    truncation_gaps,
)
from .extended import (
    CtrlCertificate,
    ObsCertificate,
    find_scale,
    lmi13_margin,
    lmi14_margin,
    make_S,
    make_T,
    make_T_inverse,
)
from .fileio import SystemFile, parse_system, write_report, write_system, write_trajectory
from .gramians import (
    GramianPair,
    certify_ctrl,
    certify_obs,
    generalized_gramians,
    inverse_gramian,
    solve_lyapunov,
)
from .ph_preserve import (
    StructuredBalanceResult,
    StructuredFactorization,
    commute_test,
    extract_reduced_ph,
    extract_rlc_circuit,
    factorize,
    hamiltonian_gramians,
    rlc_pairing,
    solve_diag_scaling,
    struct_balance_extended,
    struct_balance_generalized,
)
from .pipelines import ReductionReport, run_pipeline
from .sysmodel import (
    LtiSystem,
    PhSystem,
    StabilityReport,
    build_msd_example,
    build_rlc_example,
    ph_to_lti,
    stability,
    validate_ph,
)

__version__ = "0.1.0"
