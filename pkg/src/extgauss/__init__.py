"""Extremal bandlimited approximations to truncated and odd Gaussians.

The package evaluates the best two-sided, minorant, and majorant entire
approximants of prescribed exponential type, their closed-form optimal L1
errors, measure-integrated generalizations, and a named certification suite
for every identity and inequality the construction rests on.
"""

from .extremal import (
    Approximant,
    ErrorValue,
    Kind,
    Parity,
    dilate,
    error_best,
    error_majorant,
    error_minorant,
    eval_best_truncated,
    eval_majorant_truncated,
    eval_minorant_truncated,
    eval_odd,
    residual_l1,
)
from .measures import (
    IntegratedTarget,
    MeasureRep,
    arctan_measure,
    check_admissible,
    eval_g,
    eval_integrated,
    integrated_error,
    load_measure,
)
from .quadrature import (
    HProfile,
    H_lambda,
    QuadratureError,
    QuadResult,
    integrate,
    integrate_2d,
    integrate_line,
    l1_distance,
)
from .special_fns import (
    DomainError,
    dawson,
    ft_truncated_gaussian,
    gaussian,
    gaussian_prime,
    odd_gaussian,
    theta1,
    theta2,
    theta2_dz_imag,
    theta3,
    theta3_dz,
    theta_plus,
    truncated_gaussian,
    vartheta_plus,
)
from .verify import CheckConfig, CheckReport, run_all, run_check

__version__ = "0.1.0"

__all__ = [
    "Approximant",
    "CheckConfig",
    "CheckReport",
    "DomainError",
    "ErrorValue",
    "HProfile",
    "H_lambda",
    "IntegratedTarget",
    "Kind",
    "MeasureRep",
    "Parity",
    "QuadResult",
    "QuadratureError",
    "arctan_measure",
    "check_admissible",
    "dawson",
    "dilate",
    "error_best",
    "error_majorant",
    "error_minorant",
    "eval_best_truncated",
    "eval_g",
    "eval_integrated",
    "eval_majorant_truncated",
    "eval_minorant_truncated",
    "eval_odd",
    "ft_truncated_gaussian",
    "gaussian",
    "gaussian_prime",
    "integrate",
    "integrate_2d",
    "integrate_line",
    "integrated_error",
    "l1_distance",
    "load_measure",
    "odd_gaussian",
    "residual_l1",
    "run_all",
    "run_check",
    "theta1",
    "theta2",
    "theta2_dz_imag",
    "theta3",
    "theta3_dz",
    "theta_plus",
    "truncated_gaussian",
    "vartheta_plus",
]
