"""Variable-exponent Hardy and Bergman spaces on the unit disc.

Luxemburg norms and modulars for H^{p(.)} and A^{p(.)}_alpha, circle and
disc quadrature, exponent constructors with log-Hoelder estimation,
bounded-argument decompositions, Carleson-measure checks, radialization
and space-equivalence conditions, and Littlewood subordination, behind
both a Python API and the `vxs` command-line tool.
"""

from ._backend import BACKEND_NAME
from .analytic import (
    AnalyticFunction,
    Decomposition,
    KernelParams,
    blaschke,
    bounded_arg_decompose,
    carleson_test_function,
    complex_power,
    constant_fn,
    divide_out_zeros,
    from_callable,
    kernel,
    mobius,
    monomial,
    nth_root,
    polynomial,
    power_one_minus_z,
    product,
    rational,
    riesz_split,
    subordinate,
)
from .carleson import (
    CarlesonSquare,
    DiscMeasure,
    box_condition_sup,
    embedding_sup,
    escaping_atom_ratios,
    measure_luxemburg,
    square_mass,
)
from .equivalence import (
    ConditionReport,
    RadialEquivParams,
    StepFunction,
    comparison_weight,
    composition_check,
    condition_v,
    condition_vi,
    condition_vii,
    growth_lemma_check,
    hat_equivalence_check,
    inc_mult_check,
    kernel_mean_estimate_check,
    littlewood_check,
    random_increasing_step,
    random_step,
    separation_witness,
    step_product_integral,
)
from .errors import (
    AccuracyError,
    BracketError,
    BranchError,
    DomainError,
    EvaluationError,
    NotHarmonicError,
    NotInSpaceError,
    SchemaError,
    SingularityError,
    SubordinationError,
    VxsError,
)
from .exponent import (
    BoundaryExponent,
    ComplexifiedExponent,
    ComposedExponent,
    ConstantExponent,
    HarmonicExponent,
    RadialExponent,
    VariableExponent,
    boundary_exponent,
    conjugate,
    constant,
    constantize_radially,
    harmonic_extend,
    limsup_block_edges,
    linear_radial_exponent,
    log_holder_estimate,
    log_recip_exponent,
    make_limsup_exponent,
    make_sqrt_log_exponent,
    radial_log_holder_estimate,
)
from .numerics import (
    BergmanWeight,
    CircleMean,
    CircleRule,
    RadialIntegral,
    RadialRule,
    area_weight_u,
    bisect_monotone,
    circle_mean,
    circle_pole_mean_bounds,
    disc_integral,
    integrate_u,
    log_gamma,
)
from .report import (
    Report,
    Row,
    growing_trend,
    looks_unbounded,
    unbounded_detector,
)
from .spaces import (
    HardyNorm,
    Modular,
    bergman_modular,
    hardy_norm,
    integral_mean,
    integral_mean_modular,
    interval_norm,
    luxemburg_norm,
    scaled,
)
from .specs import (
    build_complexified,
    build_exponent,
    build_function,
    build_measure,
)
from .verify import SUITES, run_criterion, run_suite, warmup

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "AnalyticFunction", "BACKEND_NAME", "BergmanWeight",
    "BoundaryExponent", "BracketError", "BranchError", "CarlesonSquare",
    "CircleMean", "CircleRule", "ComplexifiedExponent", "ComposedExponent",
    "ConditionReport", "ConstantExponent", "Decomposition", "DiscMeasure",
    "DomainError", "EvaluationError", "HardyNorm", "HarmonicExponent",
    "KernelParams", "Modular", "NotHarmonicError", "NotInSpaceError",
    "RadialEquivParams", "RadialExponent", "RadialIntegral", "RadialRule",
    "Report", "Row", "SUITES", "SchemaError", "SingularityError",
    "StepFunction", "SubordinationError", "VariableExponent", "VxsError",
    "area_weight_u", "bergman_modular", "bisect_monotone", "blaschke",
    "boundary_exponent", "bounded_arg_decompose", "box_condition_sup",
    "build_complexified", "build_exponent", "build_function",
    "build_measure", "carleson_test_function", "circle_mean",
    "circle_pole_mean_bounds", "comparison_weight", "complex_power",
    "composition_check", "condition_v", "condition_vi", "condition_vii",
    "conjugate", "constant", "constant_fn", "constantize_radially",
    "disc_integral", "divide_out_zeros", "embedding_sup",
    "escaping_atom_ratios", "from_callable", "growing_trend",
    "growth_lemma_check", "hardy_norm", "harmonic_extend",
    "hat_equivalence_check", "inc_mult_check", "integral_mean",
    "integral_mean_modular", "integrate_u", "interval_norm", "kernel",
    "kernel_mean_estimate_check", "limsup_block_edges",
    "linear_radial_exponent", "littlewood_check", "log_gamma",
    "log_holder_estimate", "log_recip_exponent", "looks_unbounded",
    "luxemburg_norm", "make_limsup_exponent", "make_sqrt_log_exponent",
    "measure_luxemburg", "mobius", "monomial", "nth_root", "polynomial",
    "power_one_minus_z", "product", "radial_log_holder_estimate",
    "random_increasing_step", "random_step", "rational", "riesz_split",
    "run_criterion", "run_suite", "scaled", "separation_witness",
    "square_mass", "step_product_integral", "subordinate",
    "unbounded_detector", "warmup",
]
