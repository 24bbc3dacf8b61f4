from __future__ import annotations

from collections import deque
from typing import Dict, List, Sequence

from ..exceptions import HypothesisViolation
from ..models.complex import FacetWitness
from ..models.polar import IndexedPrime, ObstructionResult
from ..monomial import as_weighted
from ..monomial.operations import ComplexLike
from ..simplicial import dimension, exchange_violations, is_pure
from ..utils.logger import setup_logger
from .polarization import ass_primes_weighted

logger = setup_logger(__name__)


def _prime_with_levels(levels: Dict[int, int]) -> IndexedPrime:
    base = tuple(sorted(levels))
    return IndexedPrime(base, tuple(levels[v] for v in base))


def obstruction_endpoints(witness: FacetWitness, d: int) -> Sequence[IndexedPrime]:
    """℘_{F,a} with a = (d+1, 1, ..., 1) led by the exchanged vertex, and ℘_{G,b} with b ≡ 2."""
    levels_f = {v: 1 for v in witness.facet_f}
    levels_f[witness.element_i] = d + 1
    levels_g = {v: 2 for v in witness.facet_g}
    return _prime_with_levels(levels_f), _prime_with_levels(levels_g)


def _connected(start: IndexedPrime, target: IndexedPrime, primes: List[IndexedPrime], bound: int) -> bool:
    """BFS through primes whose pairwise sums have height at most ``bound``."""
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if current == target:
            return True
        for other in primes:
            if other in seen:
                continue
            if len(current.variables | other.variables) <= bound:
                seen.add(other)
                queue.append(other)
    return False


def cm_obstruction_check(complex_: ComplexLike, weights=None, k: int = 1) -> ObstructionResult:
    """Localized connectedness test on the associated primes of the polarized symbolic power.

    ``Obstructed`` certifies that S/J(Δ,ω)^(k) is not Cohen–Macaulay. ``Pass`` is
    inconclusive: it only says that no witness of a failed exchange blocks connectivity.
    """
    wc = as_weighted(complex_, weights)
    if not is_pure(wc.complex):
        raise HypothesisViolation("the complex must be pure")
    d = dimension(wc.complex) + 1
    if any(k * w < d + 1 for w in wc.weights):
        raise HypothesisViolation(f"every kω_F must be at least dim + 2 = {d + 1}")

    ass = ass_primes_weighted(wc, k=k)
    checked = 0
    for witness in exchange_violations(wc.complex):
        checked += 1
        start, target = obstruction_endpoints(witness, d)
        ambient = start.variables | target.variables
        local = [p for p in ass if p.variables <= ambient]
        if not _connected(start, target, local, d + 1):
            logger.debug("witness %s blocks connectivity among %s local primes", witness.to_dict(), len(local))
            return ObstructionResult(
                obstructed=True,
                witness=witness,
                start=start,
                target=target,
                local_primes=tuple(local),
                witnesses_checked=checked,
            )
    return ObstructionResult(obstructed=False, witnesses_checked=checked)
