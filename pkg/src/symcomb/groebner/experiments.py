from __future__ import annotations

from itertools import combinations
from typing import List, Sequence

from ..exceptions import HypothesisViolation, OutOfRange, ResourceCapExceeded
from ..homalg import invariants_of_monomial
from ..models.polynomial import DeformationReport, Polynomial, TermOrder
from ..monomial import complex_of, height_and_dim, radical
from ..simplicial import dimension, is_pure, is_strongly_connected
from ..utils.logger import setup_logger
from .buchberger import initial_ideal, radical_membership

logger = setup_logger(__name__)


def bracket(n: int, i: int, j: int) -> Polynomial:
    """[i,j] = x_i·y_j − x_j·y_i on the generic 2×(n+1) matrix, columns 0..n.

    Row one is x1..x_{n+1}, row two is x_{n+2}..x_{2n+2}.
    """
    size = 2 * (n + 1)
    xi, xj = Polynomial.variable(size, i + 1), Polynomial.variable(size, j + 1)
    yi, yj = Polynomial.variable(size, n + 2 + i), Polynomial.variable(size, n + 2 + j)
    return xi * yj - xj * yi


def minors_2xn(n: int) -> List[Polynomial]:
    return [bracket(n, i, j) for i, j in combinations(range(n + 1), 2)]


def antidiagonal_generators(n: int) -> List[Polynomial]:
    """g_k = Σ_{i<j, i+j=k} [i,j] for k = 1..2n−1."""
    gens = []
    for k in range(1, 2 * n):
        total = Polynomial.zero(2 * (n + 1))
        for i in range(0, k // 2 + 1):
            j = k - i
            if i < j <= n:
                total = total + bracket(n, i, j)
        gens.append(total)
    return gens


def verify_ara_minors2xn(n: int, max_n: int = 3) -> bool:
    """√(g_1, …, g_{2n−1}) = √(I_2) for the generic 2×(n+1) matrix."""
    if n < 2:
        raise OutOfRange(f"need n >= 2, got {n}")
    if n > max_n:
        logger.warning("ara check for n=%s refused, limit is %s", n, max_n)
        raise ResourceCapExceeded(f"n={n} is above the limit {max_n}")
    minors = minors_2xn(n)
    gens = antidiagonal_generators(n)
    for index, g in enumerate(gens, start=1):
        if not radical_membership(g, minors):
            logger.info("g_%s is not in the radical of the minors", index)
            return False
    for minor in minors:
        if not radical_membership(minor, gens):
            logger.info("minor %s is not in the radical of the g's", minor)
            return False
    return True


def deformation_connectedness_report(gens: Sequence[Polynomial], order: TermOrder) -> DeformationReport:
    """Connectedness of the complex of √in(I) next to the Cohen-Macaulayness of k[Δ]."""
    if not all(g.is_homogeneous() for g in gens):
        raise HypothesisViolation("generators must be homogeneous")
    initial = initial_ideal(gens, order)
    root = radical(initial)
    complex_ = complex_of(root)
    _, krull = height_and_dim(initial)
    report = DeformationReport(
        order=order,
        initial_ideal=initial,
        radical=root,
        complex=complex_,
        dim_match=krull == dimension(complex_) + 1,
        pure=is_pure(complex_),
        strongly_connected=is_pure(complex_) and is_strongly_connected(complex_),
        is_cm_of_initial=invariants_of_monomial(root).is_cm,
    )
    logger.debug("deformation report: %s facets, connected=%s", len(complex_.facets), report.strongly_connected)
    return report
