from .obstruction import cm_obstruction_check, obstruction_endpoints
from .polarization import (
    ass_primes_prime_power,
    ass_primes_weighted,
    indexed_min_primes,
    indexed_prime_of,
    min_primes_bruteforce,
    polarize,
    polarized_variable_count,
)

__all__ = [
    "polarize",
    "polarized_variable_count",
    "ass_primes_prime_power",
    "ass_primes_weighted",
    "min_primes_bruteforce",
    "indexed_prime_of",
    "indexed_min_primes",
    "cm_obstruction_check",
    "obstruction_endpoints",
]
