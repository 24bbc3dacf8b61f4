from __future__ import annotations

from itertools import combinations_with_replacement
from math import gcd
from typing import List, Sequence, Set, Tuple

from ..exceptions import OutOfRange
from ..models.partition import IdentityReport, MinorsParams, RegularityInfo, RelationBounds
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def regularity_and_a_invariant(params: MinorsParams) -> RegularityInfo:
    """a-invariant and Castelnuovo-Mumford regularity of A_t(m,n); dimension is mn."""
    params.require_generic()
    m, n, t = params.m, params.n, params.t
    if m + n - 1 < (m * n) // t:
        a = (-(m * n)) // t
        return RegularityInfo(case="i", a=a, reg=m * n + a)
    k0 = -((m * n - t * m - t * n) // (m - t))
    a = -((m * (n + k0)) // t)
    return RegularityInfo(case="ii", a=a, reg=m * n + a, k0=k0)


def _check_range(m: int, t: int) -> None:
    if not 1 < t < m:
        raise OutOfRange(f"need 1 < t < m, got t={t}, m={m}")


def sagbi_degree_bound(m: int, t: int) -> int:
    """Degree bound for the Sagbi basis relations of the t-minors of an m-row matrix."""
    _check_range(m, t)
    return m - 2 if gcd(m - 1, t - 1) == 1 else m - 1


def relation_degree_bounds(params: MinorsParams) -> RelationBounds:
    """Column count beyond which relations stabilize and the degree bound it implies."""
    m, t = params.m, params.t
    _check_range(m, t)
    widest = regularity_and_a_invariant(MinorsParams(m, m + t, t))
    reg_bound = regularity_and_a_invariant(params).reg + 1 if params.is_generic else None
    return RelationBounds(colbound=m + t, degbound=widest.reg + 1, reg_bound=reg_bound)


def _subsums(values: Sequence[int]) -> Set[Tuple[int, int]]:
    """(size, sum) of every nonempty sub-multiset."""
    reached = {(0, 0)}
    for value in values:
        reached |= {(size + 1, total + value) for size, total in reached}
    reached.discard((0, 0))
    return reached


def partition_identity(a: Sequence[int], b: Sequence[int], q: int) -> IdentityReport:
    """Classify a₁+…+a_k = b₁+…+b_l over [q] by searching for proper subidentities."""
    for value in list(a) + list(b):
        if not 1 <= value <= q:
            raise OutOfRange(f"entry {value} is outside [1, {q}]")
    k, l_ = len(a), len(b)
    is_identity = k > 0 and l_ > 0 and sum(a) == sum(b)
    is_homogeneous = is_identity and k == l_
    if not is_identity:
        return IdentityReport(False, False, False, False)

    left = _subsums(a)
    right = _subsums(b)
    is_primitive = True
    is_homogeneous_primitive = is_homogeneous
    for r, total in left:
        for s in range(1, l_ + 1):
            if (s, total) not in right:
                continue
            if r + s < k + l_:
                is_primitive = False
            if r == s and r < k:
                is_homogeneous_primitive = False
    return IdentityReport(is_identity, is_homogeneous, is_primitive, is_homogeneous_primitive)


def enumerate_hpi(q: int, t: int, k: int) -> List[Tuple[int, ...]]:
    """Homogeneous primitive identities a₁+…+a_k = t+…+t with entries in [q]."""
    if not 1 <= t <= q or k < 1:
        raise OutOfRange(f"need 1 <= t <= q and k >= 1, got q={q}, t={t}, k={k}")
    found = [
        combo
        for combo in combinations_with_replacement(range(1, q + 1), k)
        if sum(combo) == t * k and partition_identity(combo, [t] * k, q).is_homogeneous_primitive
    ]
    logger.debug("q=%s t=%s k=%s: %s homogeneous primitive identities", q, t, k, len(found))
    return found
