"""Numerical toolkit for Gaussian states of the radiation field: state
parametrizations, Uhlmann fidelity, nonclassicality and entanglement degrees,
separability, and the characteristic-function model of CV teleportation,
cross-validated against a truncated Fock-space oracle."""

from .entanglement import (
    closest_separable_numeric,
    degree_e0,
    entropy_of_entanglement_svs,
    peres_simon_separable,
    separability_threshold_rs,
)
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    DisplacedResource,
    DomainError,
    TruncationWarning,
    UnphysicalState,
)
from .fidelity import (
    FidelityIntermediates,
    TwoModeFidelityIntermediates,
    bures_distance,
    fidelity_one_mode,
    fidelity_two_mode_sts,
    one_mode_intermediates,
    two_mode_intermediates,
)
from .fock import (
    FockDensityMatrix,
    dsts_dm,
    sts2_dm,
    thermal_dm,
    trace_product,
    uhlmann_fidelity_numeric,
    von_neumann_entropy,
)
from .nonclassicality import (
    closest_classical_numeric,
    degree_q0,
    is_classical,
    nonclassicality_threshold,
)
from .states import (
    CovMat1,
    CovMat2,
    DstsParams,
    LocalInvariants,
    OneModeGaussianCF,
    TwoModeGaussianCF,
    TwoModeStsParams,
    cf2_to_cov2,
    cf_to_cov,
    cf_to_dsts,
    cov_to_cf,
    dsts_to_cf,
    eval_cf1,
    eval_cf1_cov,
    eval_cf2,
    local_invariants,
    parse_state,
    state_to_dict,
    sts_to_cf2,
    sts_to_cov2,
)
from .teleport import (
    TeleportVariables,
    e0_from_z,
    sweep_fig1,
    sweep_fig2,
    teleport_cf,
    teleport_fidelity,
    teleport_fidelity_from_states,
    teleport_symmetric_sts,
    teleport_variables,
    teleport_with_noise,
    z_from_e0,
)

__version__ = "0.1.0"

__all__ = [
    "CovMat1",
    "CovMat2",
    "ConvergenceFailure",
    "DimensionMismatch",
    "DisplacedResource",
    "DomainError",
    "DstsParams",
    "FidelityIntermediates",
    "FockDensityMatrix",
    "LocalInvariants",
    "OneModeGaussianCF",
    "TeleportVariables",
    "TruncationWarning",
    "TwoModeFidelityIntermediates",
    "TwoModeGaussianCF",
    "TwoModeStsParams",
    "UnphysicalState",
    "bures_distance",
    "cf2_to_cov2",
    "cf_to_cov",
    "cf_to_dsts",
    "closest_classical_numeric",
    "closest_separable_numeric",
    "cov_to_cf",
    "degree_e0",
    "degree_q0",
    "dsts_dm",
    "dsts_to_cf",
    "e0_from_z",
    "entropy_of_entanglement_svs",
    "eval_cf1",
    "eval_cf1_cov",
    "eval_cf2",
    "fidelity_one_mode",
    "fidelity_two_mode_sts",
    "is_classical",
    "local_invariants",
    "nonclassicality_threshold",
    "one_mode_intermediates",
    "parse_state",
    "peres_simon_separable",
    "separability_threshold_rs",
    "state_to_dict",
    "sts2_dm",
    "sts_to_cf2",
    "sts_to_cov2",
    "sweep_fig1",
    "sweep_fig2",
    "teleport_cf",
    "teleport_fidelity",
    "teleport_fidelity_from_states",
    "teleport_symmetric_sts",
    "teleport_variables",
    "teleport_with_noise",
    "thermal_dm",
    "trace_product",
    "two_mode_intermediates",
    "uhlmann_fidelity_numeric",
    "von_neumann_entropy",
    "z_from_e0",
]
