"""Copositivity detection for symmetric tensors.

A symmetric tensor is copositive when its homogeneous form is nonnegative
on the nonnegative orthant.  This package decides the question by branch
and bound over the standard simplex: cells are certified through the sign
pattern of their barycentric coefficient tensors, refuted through negative
vertex values, and refined by longest-edge bisection.  Supporting modules
provide the tensor arithmetic, cheap necessary-condition prescreens, a
power method for the nonnegative spectral radius, and generators for the
standard test families.
"""

from .detector import (
    CellKind,
    CellStatus,
    DetectorConfig,
    StallDiagnostic,
    Verdict,
    VerdictKind,
    certify_cell,
    check_boundary_zero_stall,
    detect,
    detect_with_relaxation,
    verify_witness,
)
from .instances import (
    Monomial,
    choi_lam_tensor,
    eta_shift,
    from_polynomial,
    identity_tensor,
    motzkin_tensor,
    ones_tensor,
    polynomial_from_json,
    random_tensor,
    random_tensor_negative_diagonal,
    robinson_tensor,
)
from .prescreen import (
    PrescreenReport,
    barycentric_lattice,
    diagonal_check,
    pencil_refute,
    run_prescreen,
    subtensor_sample_refute,
    zero_point_gradient_check,
)
from .simplex import (
    DegenerateCellError,
    PartitionFrontier,
    Simplex,
    standard_simplex,
)
from .spectral import (
    PowerIterationBudgetError,
    PowerIterationResult,
    spectral_radius,
)
from .tensor import SymmetricTensor, canonical_key, canonical_keys, multiplicity

__version__ = "0.1.0"

__all__ = [
    "CellKind",
    "CellStatus",
    "DegenerateCellError",
    "DetectorConfig",
    "Monomial",
    "PartitionFrontier",
    "PowerIterationBudgetError",
    "PowerIterationResult",
    "PrescreenReport",
    "Simplex",
    "StallDiagnostic",
    "SymmetricTensor",
    "Verdict",
    "VerdictKind",
    "barycentric_lattice",
    "canonical_key",
    "canonical_keys",
    "certify_cell",
    "check_boundary_zero_stall",
    "choi_lam_tensor",
    "detect",
    "detect_with_relaxation",
    "diagonal_check",
    "eta_shift",
    "from_polynomial",
    "identity_tensor",
    "motzkin_tensor",
    "multiplicity",
    "ones_tensor",
    "pencil_refute",
    "polynomial_from_json",
    "random_tensor",
    "random_tensor_negative_diagonal",
    "robinson_tensor",
    "run_prescreen",
    "spectral_radius",
    "standard_simplex",
    "subtensor_sample_refute",
    "verify_witness",
    "zero_point_gradient_check",
]
