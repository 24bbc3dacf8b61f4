from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..exceptions import AmbientMismatch
from ..models.monomial import MonomialIdeal
from ..models.polynomial import Exponents, FlatFamilyReport, GroebnerBasis, Polynomial, TermOrder
from ..utils.logger import setup_logger
from .buchberger import buchberger, initial_ideal

logger = setup_logger(__name__)


def _check_weights(f: Polynomial, weights: Sequence[int]) -> Tuple[int, ...]:
    weights = tuple(int(w) for w in weights)
    if len(weights) != f.n:
        raise AmbientMismatch(f"{len(weights)} weights for {f.n} variables")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    return weights


def _wdeg(exps: Exponents, weights: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weights, exps))


def homogenize_w(f: Polynomial, weights: Sequence[int]) -> Polynomial:
    """hom_ω(f) = Σ c·x^a·t^(deg_ω f − deg_ω a), with t the new last variable."""
    weights = _check_weights(f, weights)
    if f.is_zero():
        return Polynomial.zero(f.n + 1)
    top = max(_wdeg(exps, weights) for exps in f.terms)
    return Polynomial(f.n + 1, {exps + (top - _wdeg(exps, weights),): c for exps, c in f.terms.items()})


def substitute_t(F: Polynomial, value: Any) -> Polynomial:
    """Set the last variable to ``value``; the result lives in one variable fewer."""
    value = Fraction(value)
    terms: Dict[Exponents, Fraction] = {}
    for exps, c in F.terms.items():
        key = exps[:-1]
        terms[key] = terms.get(key, Fraction(0)) + c * value ** exps[-1]
    return Polynomial(F.n - 1, terms)


def dehomogenize(F: Polynomial) -> Polynomial:
    return substitute_t(F, 1)


def initial_form_w(f: Polynomial, weights: Sequence[int]) -> Polynomial:
    """The terms of f of largest ω-degree."""
    weights = _check_weights(f, weights)
    if f.is_zero():
        return f
    top = max(_wdeg(exps, weights) for exps in f.terms)
    return Polynomial(f.n, {exps: c for exps, c in f.terms.items() if _wdeg(exps, weights) == top})


def weight_order(weights: Sequence[int], tiebreak: str = "degrevlex") -> TermOrder:
    return TermOrder.weighted(weights, tiebreak)


def homogenize_ideal(gens: Sequence[Polynomial], weights: Sequence[int]) -> List[Polynomial]:
    """Generators of hom_ω(I): hom_ω of a Gröbner basis for the ω-graded order."""
    basis = buchberger(gens, weight_order(weights))
    return [homogenize_w(g, weights) for g in basis]


def _candidates(order: TermOrder, base: int) -> Tuple[int, ...]:
    n = order.n
    rank = {var: position for position, var in enumerate(order.priority)}
    if order.kind == "lex" or (order.kind == "weighted" and order.tiebreak == "lex"):
        tie = [base ** (n - 1 - rank[v]) for v in range(1, n + 1)]
    else:
        tie = [base ** n - base ** rank[v] for v in range(1, n + 1)]
    if order.kind != "weighted":
        return tuple(tie)
    scale = base ** (n + 1)
    return tuple(scale * w + t for w, t in zip(order.weights, tie))


def _represents(basis: GroebnerBasis, weights: Sequence[int]) -> bool:
    for g in basis:
        lm = g.leading_monomial(basis.order)
        top = _wdeg(lm, weights)
        if any(_wdeg(exps, weights) >= top for exps in g.terms if exps != lm):
            return False
    return True


def weight_representing_order(
    gens: Sequence[Polynomial], order: TermOrder, max_base: int = 64
) -> Optional[Tuple[int, ...]]:
    """A positive integer ω with in_ω(g) = in_≺(g) on the reduced basis, or None."""
    basis = buchberger(gens, order)
    for base in range(2, max_base + 1):
        weights = _candidates(order, base)
        if _represents(basis, weights):
            logger.debug("order %s represented by %s", order.kind, weights)
            return weights
    logger.info("no weight up to base %s represents the %s order", max_base, order.kind)
    return None


def flat_family_check(gens: Sequence[Polynomial], weights: Sequence[int]) -> FlatFamilyReport:
    """Compare the fibers of hom_ω(I) at t=1 with I and at t=0 with the ω-initial ideal."""
    n = gens[0].n
    order = weight_order(weights)
    basis = buchberger(gens, order)
    lifted = [homogenize_w(g, weights) for g in basis]

    reference = TermOrder.degrevlex(n)
    generic = buchberger([substitute_t(F, 1) for F in lifted], reference)
    original = buchberger(gens, reference)

    special = [substitute_t(F, 0) for F in lifted]
    tiebreak = TermOrder.degrevlex(n) if order.tiebreak == "degrevlex" else TermOrder.lex(n)
    if basis.is_unit:
        special_matches = buchberger(special, tiebreak).is_unit
    else:
        special_matches = initial_ideal(special, tiebreak) == MonomialIdeal.from_exponents(
            n, basis.leading_monomials()
        )
    return FlatFamilyReport(
        weights=tuple(weights),
        generic_fiber_matches=generic.generators == original.generators,
        special_fiber_matches=special_matches,
        basis_size=len(basis),
    )
