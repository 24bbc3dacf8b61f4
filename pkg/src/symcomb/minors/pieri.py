from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

from ..exceptions import ClassificationMismatch, NotAdmissible, OutOfRange
from ..models.partition import BiDiagram, Partition, partitions_of
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

FAMILIES = (
    "one-row rectangle",
    "rectangle with d-1 rows",
    "rectangle with d rows",
    "fat hook with long first row",
    "fat hook with short last row",
)


def _check_t(t: int) -> None:
    if t < 1:
        raise OutOfRange(f"minor size must be positive, got {t}")


def is_admissible(lam: Partition, t: int) -> bool:
    """t divides |λ| and λ has at most |λ|/t parts."""
    _check_t(t)
    return lam.size % t == 0 and t * lam.length <= lam.size


def is_d_admissible(lam: Partition, t: int, d: int) -> bool:
    return is_admissible(lam, t) and lam.size == t * d


def admissible_degree(lam: Partition, t: int) -> int:
    if not is_admissible(lam, t):
        raise NotAdmissible(f"{lam} is not admissible for t={t}")
    return lam.size // t


def _interlaced(parts: Tuple[int, ...], total: int, max_len: int) -> List[Tuple[int, ...]]:
    """μ with λ_{i+1} ≤ μ_i ≤ λ_i, |μ| = total and at most max_len parts."""
    k = len(parts)
    lows = [parts[i + 1] if i + 1 < k else 0 for i in range(k)]
    highs = [parts[i] if i < max_len else 0 for i in range(k)]
    if any(lo > hi for lo, hi in zip(lows, highs)):
        return []
    tail_high = [sum(highs[i:]) for i in range(k + 1)]
    tail_low = [sum(lows[i:]) for i in range(k + 1)]
    found: List[Tuple[int, ...]] = []

    def build(index: int, remaining: int, prefix: Tuple[int, ...]) -> None:
        if index == k:
            if remaining == 0:
                found.append(tuple(p for p in prefix if p))
            return
        for value in range(highs[index], lows[index] - 1, -1):
            rest = remaining - value
            if tail_low[index + 1] <= rest <= tail_high[index + 1]:
                build(index + 1, rest, prefix + (value,))

    build(0, total, ())
    return found


@lru_cache(maxsize=None)
def _predecessor_parts(parts: Tuple[int, ...], t: int) -> Tuple[Tuple[int, ...], ...]:
    d = sum(parts) // t
    if d <= 1:
        return ()
    return tuple(_interlaced(parts, sum(parts) - t, d - 1))


def predecessors(lam: Partition, t: int) -> List[Partition]:
    """(d−1)-admissible λ′ with λ′ ⊆ λ ⊆ λ′(t), largest first; empty for λ = (t)."""
    admissible_degree(lam, t)
    return [Partition(p) for p in _predecessor_parts(lam.parts, t)]


def has_unique_predecessor(lam: Partition, t: int) -> bool:
    """Rectangle, or fat hook with exactly d rows; confirmed by counting predecessors."""
    d = admissible_degree(lam, t)
    if d < 2:
        raise NotAdmissible(f"{lam} has degree {d}; predecessors start at degree 2")
    closed = lam.is_rectangle() or (lam.is_fat_hook() and lam.length == d)
    counted = len(_predecessor_parts(lam.parts, t)) == 1
    if closed != counted:
        raise ClassificationMismatch(
            f"{lam}, t={t}: shape test says {closed}, predecessor count says {counted}"
        )
    return closed


@lru_cache(maxsize=None)
def _chain_count(parts: Tuple[int, ...], t: int) -> int:
    if sum(parts) == t:
        return 1
    return sum(_chain_count(p, t) for p in _predecessor_parts(parts, t))


@lru_cache(maxsize=None)
def _pair_count(gamma: Tuple[int, ...], lam: Tuple[int, ...], t: int) -> int:
    if sum(gamma) == t:
        return 1
    return sum(
        _pair_count(g, l_, t)
        for g in _predecessor_parts(gamma, t)
        for l_ in _predecessor_parts(lam, t)
    )


def pieri_multiplicity(lam: Partition, t: int) -> int:
    """Multiplicity of L_λ in the d-th tensor power of the t-th exterior power."""
    admissible_degree(lam, t)
    return _chain_count(lam.parts, t) if lam.parts else 1


def multiplicity_n(bi: BiDiagram, t: int) -> int:
    """n(γ,λ) through the predecessor recursion, memoized on the pair."""
    d_gamma = admissible_degree(bi.gamma, t)
    d_lam = admissible_degree(bi.lam, t)
    if d_gamma != d_lam or d_gamma < 1:
        raise NotAdmissible(f"{bi} is not a d-admissible bi-diagram for t={t}")
    logger.debug("n%s for t=%s", bi, t)
    return _pair_count(bi.gamma.parts, bi.lam.parts, t)


def multiplicity_one_class(lam: Partition, t: int) -> Optional[str]:
    """Which multiplicity-one family λ falls in, or None."""
    d = admissible_degree(lam, t)
    k = lam.length
    if lam.is_rectangle():
        if k == 1:
            return FAMILIES[0]
        if k == d - 1:
            return FAMILIES[1]
        if k == d:
            return FAMILIES[2]
        return None
    if k == d and lam.is_fat_hook():
        if lam.parts[1] == lam.parts[-1]:
            return FAMILIES[3]
        if lam.parts[0] == lam.parts[-2]:
            return FAMILIES[4]
    return None


def admissible_partitions(t: int, d: int, max_part: Optional[int] = None) -> List[Partition]:
    """d-admissible partitions of td, optionally with parts at most max_part."""
    _check_t(t)
    return list(partitions_of(t * d, d, max_part))
