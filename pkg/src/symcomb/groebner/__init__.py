from .buchberger import (
    buchberger,
    ideal_contains,
    ideal_membership,
    initial_ideal,
    normal_form,
    radical_membership,
    s_polynomial,
    verify_basis,
)
from .deformation import (
    dehomogenize,
    flat_family_check,
    homogenize_ideal,
    homogenize_w,
    initial_form_w,
    substitute_t,
    weight_order,
    weight_representing_order,
)
from .experiments import (
    antidiagonal_generators,
    bracket,
    deformation_connectedness_report,
    minors_2xn,
    verify_ara_minors2xn,
)

__all__ = [
    "normal_form",
    "s_polynomial",
    "buchberger",
    "verify_basis",
    "initial_ideal",
    "ideal_membership",
    "ideal_contains",
    "radical_membership",
    "homogenize_w",
    "dehomogenize",
    "substitute_t",
    "initial_form_w",
    "weight_order",
    "homogenize_ideal",
    "weight_representing_order",
    "flat_family_check",
    "bracket",
    "minors_2xn",
    "antidiagonal_generators",
    "verify_ara_minors2xn",
    "deformation_connectedness_report",
]
