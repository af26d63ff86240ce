"""Exact arithmetic for sharing spin polarization into pseudopure subspaces.

Given an ensemble of n spin-1/2 nuclei of which p carry polarization sigma,
the package computes the maximal bias of a k-qubit pseudopure subspace,
classifies it against separability and entanglability bounds, and emits
sweep and figure data.  All core values are exact rationals; irrational
bounds are compared through big-integer inequalities, never approximations.
"""

from ._version import __version__
from .bounds import (
    BoundCheck,
    BoundFamily,
    ExactBound,
    Region,
    RegionVerdict,
    ThermalConvention,
    classify_region,
    crossover_k,
    delta_lower_braunstein,
    delta_lower_gb,
    delta_upper,
    pure_bias_above_gb,
    sharing_crossover,
    sharing_curve,
    thermal_bias,
    thermal_crossover,
    verify_never_separable,
)
from .errors import (
    ConcentrationError,
    ConsistencyError,
    DomainError,
    ResourceError,
    ThresholdUnreachableError,
    ValidityError,
)
from .exact import decimal_str, parse_scalar
from .formulas import (
    CriticalSize,
    SigmaThreshold,
    critical_k_partial,
    critical_k_pure,
    delta_partial,
    delta_pure,
    f_partial,
    f_pure,
    sigma_threshold,
)
from .oracle import (
    DenseDiagonal,
    dense_build,
    dense_cyclic_average,
    dense_overlap_f,
    dense_partial_trace,
    rle_sorted,
    sorted_dense,
)
from .report import (
    ReportMeta,
    ReportRow,
    SharingReport,
    build_sharing_report,
    build_thermal_report,
    figure_reports,
    parse_report_csv,
    parse_report_json,
    recompute_row,
    report_to_csv,
    report_to_json,
)
from .spectrum import (
    EnsembleSpec,
    PseudopureState,
    Run,
    Spectrum,
    bias_from_f,
    f_from_bias,
    make_product_state,
    make_thermal_state,
    overlap_f,
    pseudopurify,
    reduce_by_blocking,
)

__all__ = [
    "__version__",
    "BoundCheck",
    "BoundFamily",
    "ConcentrationError",
    "ConsistencyError",
    "CriticalSize",
    "DenseDiagonal",
    "DomainError",
    "EnsembleSpec",
    "ExactBound",
    "PseudopureState",
    "Region",
    "RegionVerdict",
    "ReportMeta",
    "ReportRow",
    "ResourceError",
    "Run",
    "SharingReport",
    "SigmaThreshold",
    "Spectrum",
    "ThermalConvention",
    "ThresholdUnreachableError",
    "ValidityError",
    "bias_from_f",
    "build_sharing_report",
    "build_thermal_report",
    "classify_region",
    "critical_k_partial",
    "critical_k_pure",
    "crossover_k",
    "decimal_str",
    "delta_lower_braunstein",
    "delta_lower_gb",
    "delta_partial",
    "delta_pure",
    "delta_upper",
    "dense_build",
    "dense_cyclic_average",
    "dense_overlap_f",
    "dense_partial_trace",
    "f_from_bias",
    "f_partial",
    "f_pure",
    "figure_reports",
    "make_product_state",
    "make_thermal_state",
    "overlap_f",
    "parse_report_csv",
    "parse_report_json",
    "parse_scalar",
    "pseudopurify",
    "pure_bias_above_gb",
    "recompute_row",
    "reduce_by_blocking",
    "report_to_csv",
    "report_to_json",
    "rle_sorted",
    "sharing_crossover",
    "sharing_curve",
    "sigma_threshold",
    "sorted_dense",
    "thermal_bias",
    "thermal_crossover",
    "verify_never_separable",
]
