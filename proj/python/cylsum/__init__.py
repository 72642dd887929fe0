"""Fourier orthogonal expansions and Cesaro (C, delta) means on the cylinder."""

from cylsum._core import (
    ConfigError,
    CriticalIndexReport,
    CylinderSpace,
    ExpansionCoeffs,
    LebesgueEstimate,
    __version__,
    ball_grid,
    cesaro_coeff,
    cesaro_kernel,
    cesaro_sum_eval,
    critical_delta,
    dlambda,
    dlambda_identity_check,
    eval_gegenbauer,
    eval_jacobi,
    expand,
    expand_named,
    kernel,
    lebesgue_quantity,
    lebesgue_sup,
    partial_sum_eval,
    pochhammer,
    run_command,
)

__all__ = [
    "ConfigError",
    "CriticalIndexReport",
    "CylinderSpace",
    "ExpansionCoeffs",
    "LebesgueEstimate",
    "__version__",
    "ball_grid",
    "cesaro_coeff",
    "cesaro_kernel",
    "cesaro_sum_eval",
    "critical_delta",
    "dlambda",
    "dlambda_identity_check",
    "eval_gegenbauer",
    "eval_jacobi",
    "expand",
    "expand_named",
    "kernel",
    "lebesgue_quantity",
    "lebesgue_sup",
    "partial_sum_eval",
    "pochhammer",
    "run_command",
]
