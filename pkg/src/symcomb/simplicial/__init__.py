from .complexes import dimension, dual, from_facets, is_pure, simplex, stanley_reisner_primes
from .connectivity import connectivity_degree, facet_graph, is_strongly_connected
from .matroid import exchange_violations, is_matroid, symmetric_exchange_holds

__all__ = [
    "from_facets",
    "simplex",
    "dimension",
    "is_pure",
    "dual",
    "stanley_reisner_primes",
    "is_matroid",
    "exchange_violations",
    "symmetric_exchange_holds",
    "is_strongly_connected",
    "facet_graph",
    "connectivity_degree",
]
