"""Numerical certification of the arctan/arctanh contour integral identity."""

from ._contourint import (
    CLOSED_FORM_VALUE,
    ContourintError,
    G,
    RegionTag,
    cauchy_residual,
    check_names,
    classify_region,
    f,
    f_oracle,
    gk_adaptive,
    integral_direct,
    principal_log,
    real_integrand,
    run_all,
    run_check,
    semicircle_integral,
    tanh_sinh,
)

__all__ = [
    "CLOSED_FORM_VALUE",
    "ContourintError",
    "G",
    "RegionTag",
    "cauchy_residual",
    "check_names",
    "classify_region",
    "f",
    "f_oracle",
    "gk_adaptive",
    "integral_direct",
    "principal_log",
    "real_integrand",
    "run_all",
    "run_check",
    "semicircle_integral",
    "tanh_sinh",
]
