"""Exact Poisson homology calculator for r-matrix type brackets."""

__version__ = "0.1.0"

from .catalog import (
    HomogenizationMap,
    OneFormBasis,
    StructureId,
    build_structure,
    euler_field,
    homogenize,
    moment_map,
    recursion_operator,
    weight_split,
)
from .forms import (
    PolyForm,
    PolyVector,
    bivector_form_pairing,
    d_of_polynomial,
    exterior_derivative,
    interior_product,
    lie_derivative,
    schouten_bracket,
)
from .homology import (
    HomologyRow,
    HomologyTable,
    balanced_kernel_table,
    harmonic_kernel,
    homology_table,
)
from .linalg import ExactMatrix
from .report import RunConfig, render_json, run_report
from .operators import (
    AcyclicityVerdict,
    classify_acyclicity,
    diagonal_coefficients,
    homotopy_operator,
    jacobiator,
    laplacian_via_coefficients,
    poisson_bracket,
    poisson_differential,
    poisson_differential_decomposable,
)
from .poly import AmbientMismatch, Multidegree, Polynomial, VarSet, trace_pairing
from .slices import (
    FixedMultidegree,
    GradingViolation,
    Slice,
    SliceSpec,
    WeightAtMost,
)
from .suites import SUITE_NAMES, run_suite
from .spectral import (
    SigmaCocycle,
    convergence_check,
    e1_page,
    sigma_cocycle_checks,
    sigma_independence,
    truncated_homology,
)

__all__ = [
    "AcyclicityVerdict",
    "AmbientMismatch",
    "ExactMatrix",
    "FixedMultidegree",
    "GradingViolation",
    "HomogenizationMap",
    "HomologyRow",
    "HomologyTable",
    "Multidegree",
    "OneFormBasis",
    "PolyForm",
    "PolyVector",
    "Polynomial",
    "SigmaCocycle",
    "Slice",
    "SliceSpec",
    "StructureId",
    "VarSet",
    "WeightAtMost",
    "balanced_kernel_table",
    "bivector_form_pairing",
    "build_structure",
    "classify_acyclicity",
    "convergence_check",
    "d_of_polynomial",
    "diagonal_coefficients",
    "e1_page",
    "euler_field",
    "exterior_derivative",
    "harmonic_kernel",
    "homogenize",
    "homology_table",
    "homotopy_operator",
    "interior_product",
    "jacobiator",
    "laplacian_via_coefficients",
    "lie_derivative",
    "moment_map",
    "poisson_bracket",
    "poisson_differential",
    "poisson_differential_decomposable",
    "recursion_operator",
    "schouten_bracket",
    "sigma_cocycle_checks",
    "sigma_independence",
    "trace_pairing",
    "truncated_homology",
    "weight_split",
    "RunConfig",
    "render_json",
    "run_report",
    "SUITE_NAMES",
    "run_suite",
]
