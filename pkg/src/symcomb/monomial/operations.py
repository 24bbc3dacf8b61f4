from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations_with_replacement
from typing import Any, Dict, Iterable, Optional, Sequence, Union

from config.settings import settings

from ..core import parallel_map
from ..exceptions import AmbientMismatch, DegreeCapExceeded, NonpositiveK
from ..models.complex import SimplicialComplex
from ..models.cover import WeightedComplex, WeightsLike
from ..models.monomial import Monomial, MonomialIdeal
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

ComplexLike = Union[SimplicialComplex, WeightedComplex]


def _same_ambient(i: MonomialIdeal, j: MonomialIdeal) -> None:
    if i.ambient_n != j.ambient_n:
        raise AmbientMismatch(f"ideals live in {i.ambient_n} and {j.ambient_n} variables")


def intersect(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    """I ∩ J generated by the pairwise lcms of the generators."""
    _same_ambient(i, j)
    if i.is_zero or j.is_zero:
        return MonomialIdeal(i.ambient_n)
    return MonomialIdeal(i.ambient_n, tuple(a.lcm(b) for a in i.generators for b in j.generators))


def intersect_all(ideals: Iterable[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("intersection of an empty family is the unit ideal")
    # smallest first keeps the intermediate generator lists short
    ideals.sort(key=lambda ideal: len(ideal.generators))
    return reduce(intersect, ideals)


def product(i: MonomialIdeal, j: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(i, j)
    if i.is_zero or j.is_zero:
        return MonomialIdeal(i.ambient_n)
    return MonomialIdeal(i.ambient_n, tuple(a * b for a in i.generators for b in j.generators))


def power(ideal: MonomialIdeal, k: int, degree_cap: Optional[int] = None) -> MonomialIdeal:
    """I^k with minimal generators."""
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    cap = settings.groebner_degree_cap if degree_cap is None else degree_cap
    if ideal.max_degree * k > cap:
        logger.warning("power would reach degree %s above the cap %s", ideal.max_degree * k, cap)
        raise DegreeCapExceeded(f"I^{k} reaches degree {ideal.max_degree * k} > cap {cap}")
    result = ideal
    for _ in range(k - 1):
        result = product(result, ideal)
    return result


def prime_power(facet: Sequence[int], k: int, n: int) -> MonomialIdeal:
    """℘_F^k: every degree-k monomial in the variables of F."""
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    gens = []
    for combo in combinations_with_replacement(sorted(facet), k):
        exps = [0] * n
        for v in combo:
            exps[v - 1] += 1
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, tuple(gens))


def as_weighted(complex_: ComplexLike, weights: WeightsLike = None) -> WeightedComplex:
    if isinstance(complex_, WeightedComplex):
        return complex_
    return WeightedComplex.build(complex_, weights)


def symbolic_power(
    complex_: ComplexLike,
    weights: WeightsLike = None,
    k: int = 1,
    max_workers: Optional[int] = None,
) -> MonomialIdeal:
    """J(Δ, ω)^(k) = ⋂_F ℘_F^{kω_F}."""
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    wc = as_weighted(complex_, weights)
    powers = parallel_map(
        lambda pair: prime_power(pair[0], k * pair[1], wc.n),
        list(wc.pairs()),
        max_workers=max_workers,
    )
    result = intersect_all(powers)
    logger.debug("symbolic power k=%s has %s generators", k, len(result.generators))
    return result


def weighted_ideal(complex_: ComplexLike, weights: WeightsLike = None) -> MonomialIdeal:
    """J(Δ, ω) itself."""
    return symbolic_power(complex_, weights, 1)


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal.from_supports(ideal.ambient_n, (g.support for g in ideal.generators))


def membership(mono: Monomial, ideal: MonomialIdeal) -> bool:
    return ideal.contains(mono)


@dataclass(frozen=True)
class SymbolicComparison:
    equal: bool
    witness: Optional[Monomial] = None

    def to_dict(self) -> Dict[str, Any]:
        if self.equal:
            return {"result": "Equal"}
        return {"result": "Witness", "witness": self.witness.to_text(), "exponents": list(self.witness.exponents)}


def symbolic_vs_ordinary(
    complex_: ComplexLike,
    weights: WeightsLike = None,
    k: int = 1,
) -> SymbolicComparison:
    """Compare J^(k) with J^k; on inequality return a minimal-degree x^α ∈ J^(k) ∖ J^k."""
    wc = as_weighted(complex_, weights)
    symbolic = symbolic_power(wc, k=k)
    ordinary = power(weighted_ideal(wc), k)
    for gen in symbolic.generators:
        if not ordinary.contains(gen):
            return SymbolicComparison(False, gen)
    return SymbolicComparison(True)
