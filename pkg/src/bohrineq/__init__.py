"""Numerical exploration of Bohr's power-series inequality on the unit disk.

For f in the disk algebra with Taylor coefficients a_n, the majorant
M(f, r) = sum |a_n| r^n satisfies M(f, r) <= ||f||_inf for all r <= 1/3, and
1/3 is sharp.  This package expands finite Blaschke products, encloses
M(f, r) with certified truncation tails, solves for Bohr radii by bisection,
and reproduces the sharpness of 1/3 via the single-factor closed forms.
"""

from ._kernels import BACKEND as kernel_backend
from .blaschke import (
    BlaschkeSpec,
    ConvexCombo,
    boundary_samples,
    combo_coefficients,
    evaluate,
    factor_coefficients,
    factor_difference_norm_bound,
    product_coefficients,
)
from .bohr import (
    BohrReport,
    DerivativeSignCheck,
    SharpnessResult,
    TheoremWitness,
    bohr_radius,
    boundary_derivative,
    factor_bohr_radius_closed_form,
    sharpness_search,
    verify_theorem,
)
from .majorant import (
    ONE_THIRD,
    CheckResult,
    Enclosure,
    check_lipschitz,
    check_subadditivity,
    check_submultiplicativity,
    factor_majorant_closed_form,
    majorant_enclosure,
    monotone_in_r,
)
from .series import (
    BoundaryExtraction,
    SupNormBound,
    TruncatedSeries,
    coefficients_from_boundary,
    default_truncation_order,
    series_add,
    series_mul,
    sup_norm_upper_bound,
)
from .specs import (
    FunctionSpec,
    SpecError,
    function_spec_to_json,
    parse_function_spec,
    series_from_json,
    series_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BlaschkeSpec",
    "BohrReport",
    "BoundaryExtraction",
    "CheckResult",
    "ConvexCombo",
    "DerivativeSignCheck",
    "Enclosure",
    "FunctionSpec",
    "ONE_THIRD",
    "SharpnessResult",
    "SpecError",
    "SupNormBound",
    "TheoremWitness",
    "TruncatedSeries",
    "bohr_radius",
    "boundary_derivative",
    "boundary_samples",
    "check_lipschitz",
    "check_subadditivity",
    "check_submultiplicativity",
    "coefficients_from_boundary",
    "combo_coefficients",
    "default_truncation_order",
    "evaluate",
    "factor_bohr_radius_closed_form",
    "factor_coefficients",
    "factor_difference_norm_bound",
    "factor_majorant_closed_form",
    "function_spec_to_json",
    "kernel_backend",
    "majorant_enclosure",
    "monotone_in_r",
    "parse_function_spec",
    "product_coefficients",
    "series_add",
    "series_from_json",
    "series_mul",
    "series_to_json",
    "sharpness_search",
    "sup_norm_upper_bound",
    "verify_theorem",
]
