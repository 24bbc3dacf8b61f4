from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List, Optional, Sequence, Tuple

import sympy

from ..exceptions import InsufficientData, NonpositiveK
from ..homalg import invariants_of_monomial
from ..models.cover import DimensionEstimate
from ..monomial import as_weighted, symbolic_power
from ..monomial.operations import ComplexLike
from ..utils.logger import setup_logger
from .basic import hf_abar

logger = setup_logger(__name__)

PERIODS = (1, 2, 3, 4, 6)

_Z = sympy.Symbol("z")


def _fit(points: Sequence[Tuple[int, int]]) -> Optional[sympy.Poly]:
    """Lowest-degree polynomial through every point, confirmed by at least one spare point."""
    for degree in range(len(points) - 1):
        base = [(sympy.Integer(k), sympy.Integer(v)) for k, v in points[: degree + 1]]
        poly = sympy.Poly(sympy.interpolate(base, _Z), _Z)
        if all(poly.eval(k) == v for k, v in points[degree + 1:]):
            return poly
    return None


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def estimate_dim_abar(
    complex_: ComplexLike,
    k_max: int,
    include_zero: bool = True,
    max_workers: Optional[int] = None,
) -> DimensionEstimate:
    """Growth order of HF_Ā, fitted on residue classes modulo a small quasi-period."""
    if k_max < 4:
        raise InsufficientData(f"k_max must be at least 4, got {k_max}")
    wc = as_weighted(complex_)
    start = 0 if include_zero else 1
    values = [hf_abar(wc, k, max_workers=max_workers) for k in range(start, k_max + 1)]
    points = list(zip(range(start, k_max + 1), values))
    logger.debug("HF values from k=%s: %s", start, values)

    for period in PERIODS:
        classes = [[p for p in points if p[0] % period == r] for r in range(period)]
        if any(len(cls) < 2 for cls in classes):
            break
        fits = [_fit(cls) for cls in classes]
        if any(fit is None for fit in fits):
            continue
        degree = max(fit.degree() for fit in fits)
        dimension = degree + 1
        leading = tuple(_to_fraction(fit.coeff_monomial(_Z**degree)) for fit in fits)
        multiplicity = None
        if len(set(leading)) == 1:
            multiplicity = leading[0] * factorial(degree)
        logger.debug("period %s fits with degree %s", period, degree)
        return DimensionEstimate(
            dimension=dimension,
            period=period,
            start=start,
            leading_coefficients=leading,
            hf_values=tuple(values),
            multiplicity=multiplicity,
            notes=(f"quasi-period {period}",),
        )
    raise InsufficientData(f"no quasi-period in {PERIODS} fits HF up to k={k_max}")


def min_depth_symbolic(complex_: ComplexLike, k_max: int, method: str = "polarize") -> int:
    """min_{1≤k≤k_max} depth S/J^(k)."""
    if k_max < 1:
        raise NonpositiveK(f"k_max must be positive, got {k_max}")
    wc = as_weighted(complex_)
    depths: List[int] = []
    for k in range(1, k_max + 1):
        depths.append(invariants_of_monomial(symbolic_power(wc, k=k), method=method).depth)
    logger.debug("depths of symbolic powers: %s", depths)
    return min(depths)


def abar_dimension_from_depth(complex_: ComplexLike, k_max: int, method: str = "polarize") -> int:
    """n − min depth, to compare with ``estimate_dim_abar``."""
    wc = as_weighted(complex_)
    return wc.n - min_depth_symbolic(wc, k_max, method=method)
