from .bounds import (
    enumerate_hpi,
    partition_identity,
    regularity_and_a_invariant,
    relation_degree_bounds,
    sagbi_degree_bound,
)
from .pieri import (
    FAMILIES,
    admissible_degree,
    admissible_partitions,
    has_unique_predecessor,
    is_admissible,
    is_d_admissible,
    multiplicity_n,
    multiplicity_one_class,
    pieri_multiplicity,
    predecessors,
)
from .relations import (
    no_other_shapes,
    random_integer_matrix,
    render_bidiagram,
    shape_relations,
    verify_det_relations,
    young_diagram,
)
from .schur import check_hf_At, count_tableaux, dim_schur, hf_At, hf_At_oracle, tensor_sum_rule

__all__ = [
    "FAMILIES",
    "is_admissible",
    "is_d_admissible",
    "admissible_degree",
    "admissible_partitions",
    "predecessors",
    "has_unique_predecessor",
    "pieri_multiplicity",
    "multiplicity_n",
    "multiplicity_one_class",
    "dim_schur",
    "count_tableaux",
    "hf_At",
    "hf_At_oracle",
    "check_hf_At",
    "tensor_sum_rule",
    "regularity_and_a_invariant",
    "sagbi_degree_bound",
    "relation_degree_bounds",
    "partition_identity",
    "enumerate_hpi",
    "shape_relations",
    "young_diagram",
    "render_bidiagram",
    "no_other_shapes",
    "verify_det_relations",
    "random_integer_matrix",
]
