"""Exact determinants by condensation, over integers, rationals,
tolerance-aware reals and univariate polynomials, with reference oracles,
operation counting and a Hückel secular-determinant application."""

from .ring import (
    DEFAULT_TOLERANCE,
    ApproxReal,
    DivisionByZero,
    ExactInteger,
    ExactRational,
    InexactDivision,
    Polynomial,
    RingMismatch,
    Scalar,
    add,
    exact_div,
    format_scalar,
    is_zero,
    mul,
    neg,
    parse_scalar,
    sub,
)
from .matrix import (
    IndexOutOfRange,
    Matrix,
    ParseError,
    TooSmall,
    adjugate,
    format_matrix,
    int_matrix,
    parse_matrix,
)
from .condense import (
    CondensationTrace,
    FallbackRequired,
    MitigationLog,
    MitigationPolicy,
    OpCount,
    UnremovableZero,
    condensation_det,
    condense_step,
    mitigate_interior_zeros,
    render_trace,
    replay_log,
)
from .oracle import (
    RatioReport,
    bareiss_det,
    cofactor_det,
    count_ratio,
    jacobi_check,
)
from .huckel import (
    NoConvergence,
    PiSystem,
    SecularPolynomial,
    durand_kerner,
    energy_levels,
    secular_matrix,
    secular_polynomial,
    symbolic_form,
)

__all__ = [
    "DEFAULT_TOLERANCE",
    "ApproxReal",
    "CondensationTrace",
    "DivisionByZero",
    "ExactInteger",
    "ExactRational",
    "FallbackRequired",
    "IndexOutOfRange",
    "InexactDivision",
    "Matrix",
    "MitigationLog",
    "MitigationPolicy",
    "NoConvergence",
    "OpCount",
    "ParseError",
    "PiSystem",
    "Polynomial",
    "RatioReport",
    "RingMismatch",
    "Scalar",
    "SecularPolynomial",
    "TooSmall",
    "UnremovableZero",
    "add",
    "adjugate",
    "bareiss_det",
    "cofactor_det",
    "condensation_det",
    "condense_step",
    "count_ratio",
    "durand_kerner",
    "energy_levels",
    "exact_div",
    "format_matrix",
    "format_scalar",
    "int_matrix",
    "is_zero",
    "jacobi_check",
    "mitigate_interior_zeros",
    "mul",
    "neg",
    "parse_matrix",
    "parse_scalar",
    "render_trace",
    "replay_log",
    "secular_matrix",
    "secular_polynomial",
    "sub",
    "symbolic_form",
]
