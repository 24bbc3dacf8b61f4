from __future__ import annotations

from collections import Counter
from typing import Dict, Iterable, List, Optional, Set, Tuple

from ..core import parallel_map
from ..exceptions import NotSquareFree
from ..models.betti import BettiTable
from ..models.complex import face_mask, maximal_masks
from ..models.monomial import Monomial, MonomialIdeal
from ..monomial import minimal_primes
from ..utils.logger import setup_logger
from .homology import face_count, reduced_homology_of, resolve_field

logger = setup_logger(__name__)

STRATEGIES = ("auto", "direct", "dual")

Contribution = Dict[Tuple[int, int], int]


def union_closure(masks: Iterable[int]) -> Set[int]:
    """All unions of nonempty subfamilies: the lcm lattice of a square-free ideal."""
    base = set(masks)
    closure = set(base)
    frontier = set(base)
    while frontier:
        fresh = {a | b for a in frontier for b in base} - closure
        closure |= fresh
        frontier = fresh
    return closure


def lcm_lattice(ideal: MonomialIdeal) -> List[Monomial]:
    """lcms of all nonempty sets of generators."""
    base = set(ideal.generators)
    closure = set(base)
    frontier = set(base)
    while frontier:
        fresh = {a.lcm(b) for a in frontier for b in base} - closure
        closure |= fresh
        frontier = fresh
    logger.debug("lcm lattice has %s elements", len(closure))
    return sorted(closure, key=Monomial.sort_key)


def _merge(tables: Iterable[Contribution]) -> Dict[Tuple[int, int], int]:
    total: Counter = Counter()
    for table in tables:
        total.update(table)
    return dict(total)


def hochster_betti(
    ideal: MonomialIdeal,
    field_char: Optional[int] = None,
    strategy: str = "auto",
    max_workers: Optional[int] = None,
) -> BettiTable:
    """β_{i,j}(S/I) = Σ_{|W|=j} dim H̃_{j−i−1}(Δ(I)|_W) for square-free I.

    Only W in the union lattice of generator supports contribute. Each restriction
    is evaluated directly or through its Alexander dual inside W, where
    dim H̃_d(Δ|_W) = dim H̃_{|W|−d−3}(Δ|_W^∨).
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if not ideal.is_squarefree:
        raise NotSquareFree(f"{ideal} is not square-free")
    char = resolve_field(field_char)
    n = ideal.ambient_n
    if ideal.is_zero:
        return BettiTable({}, n, char)

    supports = [face_mask(g.support) for g in ideal.generators]
    full = (1 << n) - 1
    # facets of Δ(I); 0 stands for the complex {∅}
    facets = [full & ~face_mask(prime) for prime in minimal_primes(ideal)]
    lattice = sorted(union_closure(supports))
    logger.debug("Hochster sum over %s subsets W", len(lattice))

    def contribution(w: int) -> Contribution:
        size = bin(w).count("1")
        direct = maximal_masks(f & w for f in facets)
        dual = maximal_masks(w & ~s for s in supports if s & w == s)
        use_dual = strategy == "dual" or (strategy == "auto" and face_count(dual) < face_count(direct))
        result: Contribution = {}
        if use_dual:
            for e, value in enumerate(reduced_homology_of(dual, char), start=-1):
                if value:
                    result[(e + 2, size)] = value
        else:
            for d, value in enumerate(reduced_homology_of(direct, char), start=-1):
                if value:
                    result[(size - d - 1, size)] = value
        return result

    entries = _merge(parallel_map(contribution, lattice, max_workers=max_workers))
    return BettiTable(entries, n, char)


def upper_koszul_faces(ideal: MonomialIdeal, b: Monomial) -> List[int]:
    """Maximal faces of K^b = {τ ⊆ supp b : x^{b−τ} ∈ I}, as bitmasks over the variables."""
    support = b.support
    faces = []
    for bits in range(1 << len(support)):
        exps = list(b.exponents)
        mask = 0
        for position, vertex in enumerate(support):
            if bits >> position & 1:
                exps[vertex - 1] -= 1
                mask |= 1 << (vertex - 1)
        if ideal.contains(Monomial(tuple(exps))):
            faces.append(mask)
    return maximal_masks(faces)


def koszul_betti(
    ideal: MonomialIdeal,
    field_char: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> BettiTable:
    """β_{i,b}(S/I) = dim H̃_{i−2}(K^b) over the lcm lattice; works for any monomial ideal."""
    char = resolve_field(field_char)
    n = ideal.ambient_n
    if ideal.is_zero:
        return BettiTable({}, n, char)

    def contribution(b: Monomial) -> Contribution:
        result: Contribution = {}
        homology = reduced_homology_of(upper_koszul_faces(ideal, b), char)
        for e, value in enumerate(homology, start=-1):
            if value:
                result[(e + 2, b.degree)] = value
        return result

    entries = _merge(parallel_map(contribution, lcm_lattice(ideal), max_workers=max_workers))
    return BettiTable(entries, n, char)
