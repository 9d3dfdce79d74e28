"""Numerical workbench for operator-class certification and intertwining checks.

The heavy lifting lives in the compiled extension; this package re-exports its
surface.
"""

from ._core import (  # noqa: F401
    BandOperator,
    ClassCertificate,
    DimensionError,
    DomainError,
    EigenAdjointReport,
    EigenPairCheck,
    NotHermitianError,
    OperatorClass,
    OptDiagnostics,
    PfReport,
    PfTrialResult,
    PreconditionError,
    SphereMinimum,
    SphereOptConfig,
    TensorUnitaryReport,
    TwoDimHeadReport,
    Verdict,
    class_check,
    defect_min,
    defect_value,
    eigen_adjoint_check,
    gamma_adjoint_check,
    gamma_apply,
    hs_inner,
    hs_norm,
    identity_band,
    kernel_basis,
    kron,
    lambda_family_check,
    min_eig_hermitian,
    paper_t,
    pf_residual,
    pf_theorem_trial,
    self_commutator,
    solve_intertwiner,
    support_defect_min,
    tensor_unitary_check,
    two_dim_head_check,
    unitarity_defect,
    unvec,
    vec,
    verify_counterexample,
    weighted_shift,
)

__version__ = "0.1.0"
