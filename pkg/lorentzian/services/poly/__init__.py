from lorentzian.services.poly.linear_map import IntegerMap, LinearMap
from lorentzian.services.poly.monomial import Monomial
from lorentzian.services.poly.operations import (
    IntegerForm,
    constant_hessian,
    differentiate,
    gradient,
    directional_derivative,
    dv_derivative,
    evaluate,
    has_nonneg_coeffs,
    hessian_at,
    homogenize,
    is_homogeneous,
    partial,
    substitute_linear,
    univariate_restriction,
)
from lorentzian.services.poly.polynomial import Polynomial, PolynomialError

__all__ = [
    "IntegerForm",
    "IntegerMap",
    "LinearMap",
    "Monomial",
    "Polynomial",
    "PolynomialError",
    "constant_hessian",
    "differentiate",
    "gradient",
    "directional_derivative",
    "dv_derivative",
    "evaluate",
    "has_nonneg_coeffs",
    "hessian_at",
    "homogenize",
    "is_homogeneous",
    "partial",
    "substitute_linear",
    "univariate_restriction",
]
