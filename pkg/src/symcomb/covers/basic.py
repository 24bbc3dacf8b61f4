from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from ..core import parallel_map
from ..exceptions import AmbientMismatch, NonpositiveK, NotACover
from ..models.cover import CoverClass, KCover, WeightedComplex
from ..models.monomial import Monomial
from ..monomial import as_weighted, power, symbolic_power
from ..monomial.operations import ComplexLike
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def _check_alpha(wc: WeightedComplex, alpha: Sequence[int]) -> Tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != wc.n:
        raise AmbientMismatch(f"cover has {len(alpha)} entries, complex has {wc.n} vertices")
    if any(a < 0 for a in alpha):
        raise ValueError("cover values must be nonnegative")
    return alpha


def _slacks(wc: WeightedComplex, alpha: Sequence[int], k: int) -> List[int]:
    """Σ_{i∈F} α(i) − kω_F for every facet, in facet order."""
    return [sum(alpha[v - 1] for v in facet) - k * w for facet, w in wc.pairs()]


def _is_basic(wc: WeightedComplex, alpha: Sequence[int], slacks: Sequence[int]) -> bool:
    # lowering α(i) stays a cover unless some facet through i is tight
    for vertex in range(1, wc.n + 1):
        if alpha[vertex - 1] == 0:
            continue
        if not any(slack == 0 for facet, slack in zip(wc.facets, slacks) if vertex in facet):
            return False
    return True


def classify_cover(complex_: ComplexLike, alpha: Sequence[int], k: int) -> CoverClass:
    wc = as_weighted(complex_)
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    alpha = _check_alpha(wc, alpha)
    slacks = _slacks(wc, alpha, k)
    if not any(alpha) or any(slack < 0 for slack in slacks):
        return CoverClass.NOT_A_COVER
    return CoverClass.BASIC if _is_basic(wc, alpha, slacks) else CoverClass.COVER


def reduce_to_basic(complex_: ComplexLike, alpha: Sequence[int], k: int) -> KCover:
    """Lower coordinates in sweeps over 1..n until no single unit can be removed."""
    wc = as_weighted(complex_)
    if classify_cover(wc, alpha, k) is CoverClass.NOT_A_COVER:
        raise NotACover(f"{list(alpha)} is not a {k}-cover")
    current = list(_check_alpha(wc, alpha))
    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for index in range(wc.n):
            if current[index] == 0:
                continue
            current[index] -= 1
            if any(slack < 0 for slack in _slacks(wc, current, k)):
                current[index] += 1
            else:
                changed = True
    logger.debug("reduced %s to %s in %s sweeps", list(alpha), current, sweeps)
    return KCover(tuple(current), k)


class _CoverSearch:
    """Depth-first search over α ∈ ∏[0, b_i] with facet and tightness pruning."""

    def __init__(self, wc: WeightedComplex, k: int):
        self.wc = wc
        self.k = k
        self.n = wc.n
        self.bounds = wc.vertex_bounds(k)
        self.targets = [k * w for w in wc.weights]
        self.facets = wc.facets
        # facets completed once vertex v is assigned
        self.closing: Dict[int, List[int]] = {}
        for index, facet in enumerate(self.facets):
            self.closing.setdefault(facet[-1], []).append(index)
        # vertices whose every facet is complete once v is assigned
        self.settled: Dict[int, List[int]] = {}
        for vertex in range(1, self.n + 1):
            through = [f for f in self.facets if vertex in f]
            last = max((f[-1] for f in through), default=vertex)
            self.settled.setdefault(max(last, vertex), []).append(vertex)
        # remaining capacity of the unassigned vertices of each facet
        self.tails = [self._tail_capacity(facet) for facet in self.facets]

    def _tail_capacity(self, facet: Sequence[int]) -> Dict[int, int]:
        capacity: Dict[int, int] = {}
        for vertex in range(1, self.n + 1):
            capacity[vertex] = sum(self._range(v)[-1] for v in facet if v > vertex)
        return capacity

    def _range(self, vertex: int) -> List[int]:
        return list(range(self.bounds[vertex - 1] + 1))

    def first_choices(self) -> List[int]:
        return self._range(1)

    def run(self, first_value: int) -> List[Tuple[int, ...]]:
        alpha = [0] * self.n
        found: List[Tuple[int, ...]] = []
        self._extend(alpha, 1, first_value, found)
        return found

    def _extend(self, alpha: List[int], vertex: int, value: int, found: List[Tuple[int, ...]]) -> None:
        alpha[vertex - 1] = value
        if not self._consistent(alpha, vertex):
            return
        if vertex == self.n:
            if any(alpha):
                found.append(tuple(alpha))
            return
        for nxt in self._range(vertex + 1):
            self._extend(alpha, vertex + 1, nxt, found)

    def _consistent(self, alpha: Sequence[int], vertex: int) -> bool:
        for index, facet in enumerate(self.facets):
            if facet[0] > vertex:
                continue
            partial = sum(alpha[v - 1] for v in facet if v <= vertex)
            if partial + self.tails[index][vertex] < self.targets[index]:
                return False
        for settled in self.settled.get(vertex, []):
            if alpha[settled - 1] == 0:
                continue
            tight = any(
                settled in facet and sum(alpha[v - 1] for v in facet) == target
                for facet, target in zip(self.facets, self.targets)
            )
            if not tight:
                return False
        return True


def _search(
    wc: WeightedComplex,
    k: int,
    max_workers: Optional[int] = None,
) -> List[KCover]:
    if k < 1:
        raise NonpositiveK(f"k must be positive, got {k}")
    search = _CoverSearch(wc, k)
    chunks = parallel_map(search.run, search.first_choices(), max_workers=max_workers)
    alphas = sorted(
        (alpha for chunk in chunks for alpha in chunk),
        key=lambda alpha: Monomial(alpha).sort_key(),
    )
    logger.debug("k=%s: %s basic covers", k, len(alphas))
    return [KCover(alpha, k) for alpha in alphas]


def enumerate_basic_covers(
    complex_: ComplexLike,
    k: int,
    max_workers: Optional[int] = None,
) -> List[KCover]:
    """All basic k-covers, ordered like the generators of a monomial ideal."""
    return _search(as_weighted(complex_), k, max_workers=max_workers)


def hf_abar(complex_: ComplexLike, k: int, max_workers: Optional[int] = None) -> int:
    """Hilbert function of Ā(Δ,ω) in degree k; HF(0) = 1."""
    if k == 0:
        return 1
    return len(enumerate_basic_covers(complex_, k, max_workers=max_workers))


def veronese_generation_check(complex_: ComplexLike, h: int, k: int) -> bool:
    """True when (J^(h))^k = J^(hk)."""
    wc = as_weighted(complex_)
    symbolic_h = symbolic_power(wc, k=h)
    return power(symbolic_h, k) == symbolic_power(wc, k=h * k)
