"""Variance-reduced local linear regression."""

from ._core import (
    EmptyWindow,
    SingularDesign,
    adjust_h,
    boundary_delta,
    c_delta,
    coeffs_a,
    coeffs_b,
    coverage_ratio,
    d_delta,
    fit,
    functionals,
    gamma_a,
    gamma_q,
    h0,
    interval,
    kernel,
    local_linear,
    nu_tilde,
    sample,
    weights,
)

__all__ = [
    "EmptyWindow",
    "SingularDesign",
    "adjust_h",
    "boundary_delta",
    "c_delta",
    "coeffs_a",
    "coeffs_b",
    "coverage_ratio",
    "d_delta",
    "fit",
    "functionals",
    "gamma_a",
    "gamma_q",
    "h0",
    "interval",
    "kernel",
    "local_linear",
    "nu_tilde",
    "sample",
    "weights",
]
__version__ = "0.1.0"
