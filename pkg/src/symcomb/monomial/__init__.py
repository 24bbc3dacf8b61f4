from .correspondence import (
    alexander_dual,
    complex_of,
    cover_ideal,
    height_and_dim,
    minimal_primes,
    stanley_reisner,
)
from .operations import (
    SymbolicComparison,
    as_weighted,
    intersect,
    intersect_all,
    membership,
    power,
    prime_power,
    product,
    radical,
    symbolic_power,
    symbolic_vs_ordinary,
    weighted_ideal,
)

__all__ = [
    "intersect",
    "intersect_all",
    "product",
    "power",
    "prime_power",
    "symbolic_power",
    "weighted_ideal",
    "as_weighted",
    "radical",
    "membership",
    "symbolic_vs_ordinary",
    "SymbolicComparison",
    "stanley_reisner",
    "cover_ideal",
    "alexander_dual",
    "minimal_primes",
    "complex_of",
    "height_and_dim",
]
