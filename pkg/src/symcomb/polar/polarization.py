from __future__ import annotations

from itertools import product
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..exceptions import NonpositiveK, NotSquareFree
from ..models.complex import face_mask, mask_face, maximal_masks
from ..models.monomial import Monomial, MonomialIdeal
from ..models.polar import IndexedPrime, IndexedVariable, PolarizedIdeal
from ..monomial import as_weighted
from ..monomial.operations import ComplexLike
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def polarized_variable_count(ideal: MonomialIdeal) -> int:
    return sum(max(1, e) for e in ideal.max_exponents())


def polarize(ideal: MonomialIdeal, levels: Optional[Sequence[int]] = None) -> PolarizedIdeal:
    """Replace x_i^a by x_{i,1}⋯x_{i,a} in every generator.

    Each variable gets as many levels as its largest exponent (at least one), unless
    ``levels`` asks for more.
    """
    top = [max(1, e) for e in ideal.max_exponents()]
    if levels is not None:
        if len(levels) != ideal.ambient_n or any(lv < t for lv, t in zip(levels, top)):
            raise ValueError("levels must cover the largest exponent of every variable")
        top = [int(lv) for lv in levels]
    var_map: List[IndexedVariable] = [
        (i, j) for i in range(1, ideal.ambient_n + 1) for j in range(1, top[i - 1] + 1)
    ]
    position = {variable: index for index, variable in enumerate(var_map)}

    gens = []
    for gen in ideal.generators:
        exps = [0] * len(var_map)
        for i, a in enumerate(gen.exponents, start=1):
            for j in range(1, a + 1):
                exps[position[(i, j)]] = 1
        gens.append(Monomial(tuple(exps)))
    polarized = MonomialIdeal(len(var_map), tuple(gens))
    logger.debug("polarized %s generators into %s variables", len(gens), len(var_map))
    return PolarizedIdeal(polarized, tuple(var_map), ideal)


def ass_primes_prime_power(facet: Iterable[int], k: int) -> List[IndexedPrime]:
    """Associated primes of the polarization of ℘_F^k: ℘_{F,a}, a ∈ [k]^|F|, |a| ≤ k + |F| − 1."""
    base = tuple(sorted(set(facet)))
    if not base:
        raise ValueError("the base set must be nonempty")
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    bound = k + len(base) - 1
    return [
        IndexedPrime(base, levels)
        for levels in product(range(1, k + 1), repeat=len(base))
        if sum(levels) <= bound
    ]


def ass_primes_weighted(complex_: ComplexLike, weights=None, k: int = 1) -> List[IndexedPrime]:
    """Associated primes of the polarization of J(Δ,ω)^(k), one family per facet."""
    wc = as_weighted(complex_, weights)
    primes = set()
    for facet, w in wc.pairs():
        primes.update(ass_primes_prime_power(facet, k * w))
    return sorted(primes)


def min_primes_bruteforce(ideal: MonomialIdeal) -> List[Tuple[int, ...]]:
    """Minimal primes of a square-free ideal as complements of the facets of Δ(I).

    Faces are found by scanning every subset of the variables, so keep n small.
    """
    if not ideal.is_squarefree:
        raise NotSquareFree(f"{ideal} is not square-free")
    n = ideal.ambient_n
    if ideal.is_zero:
        return [()]
    supports = [face_mask(g.support) for g in ideal.generators]
    faces = [
        mask for mask in range(1 << n)
        if not any(mask & s == s for s in supports)
    ]
    full = (1 << n) - 1
    return sorted(mask_face(full & ~facet) for facet in maximal_masks(faces))


def indexed_prime_of(polarized: PolarizedIdeal, flat_subset: Iterable[int]) -> Optional[IndexedPrime]:
    """Read a set of flat polarized variables as ℘_{F,a}; ``None`` if a base index repeats."""
    pairs = sorted(polarized.indexed(flat_subset))
    bases = [i for i, _ in pairs]
    if len(set(bases)) != len(bases) or not pairs:
        return None
    return IndexedPrime(tuple(bases), tuple(j for _, j in pairs))


def indexed_min_primes(polarized: PolarizedIdeal) -> FrozenSet[IndexedPrime]:
    primes = set()
    for subset in min_primes_bruteforce(polarized.ideal):
        prime = indexed_prime_of(polarized, subset)
        if prime is None:
            raise ValueError(f"minimal prime {subset} repeats a base variable")
        primes.add(prime)
    return frozenset(primes)
