from .basic import (
    classify_cover,
    enumerate_basic_covers,
    hf_abar,
    reduce_to_basic,
    veronese_generation_check,
)
from .growth import abar_dimension_from_depth, estimate_dim_abar, min_depth_symbolic
from .weights import extend_on_facet, induced_weights, solve_good_weight

__all__ = [
    "classify_cover",
    "reduce_to_basic",
    "enumerate_basic_covers",
    "hf_abar",
    "veronese_generation_check",
    "solve_good_weight",
    "induced_weights",
    "extend_on_facet",
    "estimate_dim_abar",
    "min_depth_symbolic",
    "abar_dimension_from_depth",
]
