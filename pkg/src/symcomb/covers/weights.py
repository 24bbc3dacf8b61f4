from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Mapping, Sequence, Tuple, Union

import sympy

from ..exceptions import NotGoodWeighted, NotMatroid, SumMismatch, VerificationError
from ..models.cover import CoverClass, Infeasible, KCover, VariableWeight, WeightedComplex
from ..monomial import as_weighted
from ..monomial.operations import ComplexLike
from ..simplicial import is_matroid
from ..utils.logger import setup_logger
from .basic import classify_cover

logger = setup_logger(__name__)


def _fraction(value) -> Fraction:
    value = sympy.nsimplify(value)
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class _Strict:
    """coeffs·τ + const > 0, remembering which vertex constraints it came from."""

    coeffs: Tuple[Fraction, ...]
    const: Fraction
    origin: FrozenSet[int]


def _parametric_solution(wc: WeightedComplex):
    """Solve Σ_{i∈F} λ(i) = ω_F exactly; λ(i) = const_i + Σ_j coeff_ij τ_j."""
    rows = [[1 if v in facet else 0 for v in range(1, wc.n + 1)] for facet in wc.facets]
    matrix = sympy.Matrix(rows)
    rhs = sympy.Matrix([w for w in wc.weights])
    try:
        solution, params = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    taus = list(params)
    affine = []
    for expr in solution:
        expr = sympy.expand(expr)
        const = _fraction(expr.subs({tau: 0 for tau in taus}))
        coeffs = tuple(_fraction(expr.coeff(tau)) for tau in taus)
        affine.append((coeffs, const))
    return affine


def _eliminate(system: List[_Strict], var: int) -> List[_Strict]:
    lower = [s for s in system if s.coeffs[var] > 0]
    upper = [s for s in system if s.coeffs[var] < 0]
    result = [s for s in system if s.coeffs[var] == 0]
    for lo in lower:
        for up in upper:
            a, b = lo.coeffs[var], -up.coeffs[var]
            coeffs = tuple(b * x + a * y for x, y in zip(lo.coeffs, up.coeffs))
            result.append(_Strict(coeffs, b * lo.const + a * up.const, lo.origin | up.origin))
    unique = {}
    for s in result:
        unique.setdefault((s.coeffs, s.const), s)
    return list(unique.values())


def _pick(system: List[_Strict], var: int, values: Sequence[Fraction]) -> Fraction:
    """A value for τ_var strictly inside the bounds left by the earlier choices."""
    lows: List[Fraction] = []
    highs: List[Fraction] = []
    for s in system:
        c = s.coeffs[var]
        if c == 0:
            continue
        rest = s.const + sum(x * v for x, v in zip(s.coeffs[:var], values))
        bound = -rest / c
        (lows if c > 0 else highs).append(bound)
    if lows and highs:
        return (max(lows) + min(highs)) / 2
    if lows:
        return max(lows) + 1
    if highs:
        return min(highs) - 1
    return Fraction(1)


def solve_good_weight(complex_: ComplexLike, weights=None) -> Union[VariableWeight, Infeasible]:
    """Find λ > 0 with Σ_{i∈F} λ(i) = ω_F for every facet, exactly over ℚ."""
    wc = as_weighted(complex_, weights)
    affine = _parametric_solution(wc)
    if affine is None:
        logger.debug("facet equations are inconsistent")
        return Infeasible("inconsistent facet equations", facets=wc.facets)

    count = len(affine[0][0]) if affine else 0
    if count == 0:
        values = [const for _, const in affine]
        bad = tuple(i + 1 for i, value in enumerate(values) if value <= 0)
        if bad:
            return Infeasible(
                "unique solution is not positive",
                vertices=bad,
                forced_values=tuple(values[v - 1] for v in bad),
            )
        return VariableWeight(tuple(values))

    system = [_Strict(coeffs, const, frozenset({i + 1})) for i, (coeffs, const) in enumerate(affine)]
    stages = [system]
    for var in reversed(range(count)):
        system = _eliminate(system, var)
        stages.append(system)
        for s in system:
            if not any(s.coeffs) and s.const <= 0:
                logger.debug("positivity fails on vertices %s", sorted(s.origin))
                return Infeasible("no strictly positive solution", vertices=tuple(sorted(s.origin)))

    # stages[count - 1 - var] involves only τ_0..τ_var
    taus: List[Fraction] = []
    for var in range(count):
        taus.append(_pick(stages[count - 1 - var], var, taus))
    lam = tuple(const + sum(c * t for c, t in zip(coeffs, taus)) for coeffs, const in affine)
    return VariableWeight(lam)


def induced_weights(complex_: ComplexLike, lam: VariableWeight) -> Tuple[Fraction, ...]:
    """ω^λ on the facets, in facet order."""
    wc = as_weighted(complex_)
    return tuple(lam.facet_weight(facet) for facet in wc.facets)


def extend_on_facet(
    complex_: ComplexLike,
    facet: Sequence[int],
    partial: Union[Sequence[int], Mapping[int, int]],
    k: int,
) -> KCover:
    """The unique basic k-cover of a good-weighted matroid with prescribed values on a facet.

    Off the facet, α(i) = kλ(i) + max(α(j) − kλ(j)) over the j ∈ F whose exchange
    F − j + i is again a facet; vertices on no facet get 0.
    """
    wc = as_weighted(complex_)
    ok, witness = is_matroid(wc.complex)
    if not ok:
        raise NotMatroid(f"not a matroid: {witness.to_dict()}")
    lam = solve_good_weight(wc)
    if isinstance(lam, Infeasible):
        raise NotGoodWeighted("the facet weights are not induced by a positive vertex weight")

    facet = tuple(sorted(facet))
    if not wc.complex.is_facet(facet):
        raise ValueError(f"{list(facet)} is not a facet")
    if isinstance(partial, Mapping):
        fixed = {int(v): int(a) for v, a in partial.items()}
    else:
        fixed = dict(zip(facet, (int(a) for a in partial)))
    if sorted(fixed) != list(facet) or any(a < 0 for a in fixed.values()):
        raise ValueError("partial values must be nonnegative and given on exactly the facet")
    target = k * wc.weight_of(facet)
    if sum(fixed.values()) != target:
        raise SumMismatch(f"values on {list(facet)} sum to {sum(fixed.values())}, need {target}")

    def shifted(v: int) -> Fraction:
        return k * lam.lam[v - 1]

    alpha = [0] * wc.n
    for v, a in fixed.items():
        alpha[v - 1] = a
    for vertex in range(1, wc.n + 1):
        if vertex in fixed:
            continue
        exchanges = [j for j in facet if wc.complex.is_facet(tuple(sorted(set(facet) - {j} | {vertex})))]
        if not exchanges:
            continue
        value = shifted(vertex) + max(fixed[j] - shifted(j) for j in exchanges)
        if value.denominator != 1 or value < 0:
            raise VerificationError(f"vertex {vertex} gets {value}, not a natural number")
        alpha[vertex - 1] = int(value)

    if classify_cover(wc, alpha, k) is not CoverClass.BASIC:
        raise VerificationError(f"{alpha} is not a basic {k}-cover")
    return KCover(tuple(alpha), k)
