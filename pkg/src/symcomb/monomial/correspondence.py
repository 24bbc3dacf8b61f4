from __future__ import annotations

from typing import List, Tuple

from ..exceptions import NotSquareFree
from ..models.complex import Face, SimplicialComplex
from ..models.monomial import MonomialIdeal
from ..simplicial import from_facets, stanley_reisner_primes
from .operations import intersect_all, radical


def _require_squarefree(ideal: MonomialIdeal) -> None:
    if not ideal.is_squarefree:
        raise NotSquareFree(f"{ideal} is not square-free")


def stanley_reisner(complex_: SimplicialComplex) -> MonomialIdeal:
    """I_Δ = ⋂_F ℘_{[n]∖F}; the zero ideal when Δ is the full simplex."""
    primes = stanley_reisner_primes(complex_)
    if any(not prime for prime in primes):
        return MonomialIdeal(complex_.n)
    return intersect_all(MonomialIdeal.prime(complex_.n, prime) for prime in primes)


def cover_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """J(Δ) = ⋂_F ℘_F."""
    return intersect_all(MonomialIdeal.prime(complex_.n, facet) for facet in complex_.facets)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """⋂_g ℘_{supp g}; its generators are the minimal vertex covers of I."""
    _require_squarefree(ideal)
    if ideal.is_zero:
        raise ValueError("the zero ideal has the unit ideal as Alexander dual")
    return intersect_all(MonomialIdeal.prime(ideal.ambient_n, g.support) for g in ideal.generators)


def minimal_primes(ideal: MonomialIdeal) -> List[Face]:
    """Variable sets of the minimal primes of a proper monomial ideal, sorted."""
    if ideal.is_zero:
        return [()]
    dual = alexander_dual(radical(ideal))
    return sorted(g.support for g in dual.generators)


def complex_of(ideal: MonomialIdeal) -> SimplicialComplex:
    """Δ(I) for square-free I: facets are complements of the minimal primes."""
    _require_squarefree(ideal)
    n = ideal.ambient_n
    if ideal.is_zero:
        return from_facets(n, [range(1, n + 1)])
    full = set(range(1, n + 1))
    return from_facets(n, [sorted(full - set(prime)) for prime in minimal_primes(ideal)])


def height_and_dim(ideal: MonomialIdeal) -> Tuple[int, int]:
    """(ht I, dim S/I) read off the minimal primes of the radical."""
    height = min(len(prime) for prime in minimal_primes(ideal))
    return height, ideal.ambient_n - height
