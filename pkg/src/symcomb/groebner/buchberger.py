from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from config.settings import settings

from ..exceptions import AmbientMismatch, DegreeCapExceeded, EmptyInput, UnitIdealError, VerificationError
from ..models.monomial import MonomialIdeal
from ..models.polynomial import Exponents, GroebnerBasis, Polynomial, TermOrder
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

Pair = Tuple[int, int]


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Exponents, b: Exponents) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _resolve_cap(degree_cap: Optional[int]) -> int:
    return settings.groebner_degree_cap if degree_cap is None else degree_cap


def _check_degree(poly: Polynomial, cap: int) -> None:
    if poly.total_degree > cap:
        logger.warning("polynomial of degree %s exceeds the Gröbner degree cap %s", poly.total_degree, cap)
        raise DegreeCapExceeded(f"degree {poly.total_degree} exceeds the cap {cap}")


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    """Fully reduced remainder of f; divisors are tried in basis order."""
    if f.n != order.n:
        raise AmbientMismatch(f"polynomial has {f.n} variables, order has {order.n}")
    divisors = []
    for g in basis:
        if g.is_zero():
            continue
        lm, lc = g.leading_term(order)
        divisors.append((lm, lc, g))

    work: Dict[Exponents, Fraction] = dict(f.terms)
    remainder: Dict[Exponents, Fraction] = {}
    while work:
        lm = max(work, key=order.key)
        coeff = work[lm]
        for g_lm, g_lc, g in divisors:
            if _divides(g_lm, lm):
                shift = tuple(a - b for a, b in zip(lm, g_lm))
                factor = coeff / g_lc
                for exps, c in g.terms.items():
                    key = tuple(a + b for a, b in zip(exps, shift))
                    value = work.get(key, Fraction(0)) - factor * c
                    if value:
                        work[key] = value
                    else:
                        work.pop(key, None)
                break
        else:
            remainder[lm] = coeff
            del work[lm]
    return Polynomial(f.n, remainder)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    f_lm, f_lc = f.leading_term(order)
    g_lm, g_lc = g.leading_term(order)
    lcm = _lcm(f_lm, g_lm)
    left = f.mul_term(tuple(a - b for a, b in zip(lcm, f_lm)), 1 / f_lc)
    right = g.mul_term(tuple(a - b for a, b in zip(lcm, g_lm)), 1 / g_lc)
    return left - right


def _prepare(gens: Iterable[Polynomial], order: TermOrder, cap: int) -> List[Polynomial]:
    polys = [g for g in gens if not g.is_zero()]
    if not polys:
        raise EmptyInput("need at least one nonzero generator")
    for g in polys:
        if g.n != order.n:
            raise AmbientMismatch(f"generator has {g.n} variables, order has {order.n}")
        _check_degree(g, cap)
    return polys


def _interreduce(basis: List[Polynomial], order: TermOrder) -> List[Polynomial]:
    """Minimal, then reduced and monic; sorted by leading monomial, largest first."""
    leads = [g.leading_monomial(order) for g in basis]
    minimal: List[Polynomial] = []
    for index, g in enumerate(basis):
        redundant = any(
            _divides(leads[other], leads[index]) and (leads[other] != leads[index] or other < index)
            for other in range(len(basis))
            if other != index
        )
        if not redundant:
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    return sorted(reduced, key=lambda p: order.key(p.leading_monomial(order)), reverse=True)


def verify_basis(basis: GroebnerBasis) -> None:
    """Every S-polynomial of the basis reduces to zero."""
    gens = list(basis.generators)
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if normal_form(s_polynomial(gens[i], gens[j], basis.order), gens, basis.order):
                raise VerificationError(f"S-polynomial of generators {i} and {j} does not reduce to zero")


def buchberger(
    gens: Iterable[Polynomial],
    order: TermOrder,
    degree_cap: Optional[int] = None,
    verify: Optional[bool] = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis by Buchberger's algorithm with the normal selection strategy.

    Pairs with coprime leading monomials are skipped, as are pairs whose lcm is
    divisible by a third leading monomial already paired with both. The unit ideal
    comes back as the basis {1}.
    """
    cap = _resolve_cap(degree_cap)
    check = settings.verify_groebner if verify is None else verify
    basis: List[Polynomial] = []
    leads: List[Exponents] = []
    pending: Set[Pair] = set()

    def add(poly: Polynomial) -> None:
        index = len(basis)
        basis.append(poly.monic(order))
        leads.append(poly.leading_monomial(order))
        pending.update((other, index) for other in range(index))

    for g in _prepare(gens, order, cap):
        h = normal_form(g, basis, order)
        if h:
            add(h)
    unit = Polynomial.constant(order.n, 1)
    processed = 0

    while pending:
        if any(not any(lm) for lm in leads):
            return GroebnerBasis((unit,), order, processed)
        i, j = min(pending, key=lambda p: (sum(_lcm(leads[p[0]], leads[p[1]])), order.key(_lcm(leads[p[0]], leads[p[1]]))))
        pending.discard((i, j))
        lcm = _lcm(leads[i], leads[j])
        if _coprime(leads[i], leads[j]):
            continue
        if any(
            k not in (i, j)
            and _divides(leads[k], lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            continue
        processed += 1
        h = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if h:
            _check_degree(h, cap)
            add(h)

    if any(not any(lm) for lm in leads):
        return GroebnerBasis((unit,), order, processed)
    result = GroebnerBasis(tuple(_interreduce(basis, order)), order, processed)
    logger.debug("Buchberger: %s pairs reduced, %s generators", processed, len(result))
    if check:
        verify_basis(result)
    return result


def initial_ideal(gens: Iterable[Polynomial], order: TermOrder, degree_cap: Optional[int] = None) -> MonomialIdeal:
    basis = buchberger(gens, order, degree_cap)
    if basis.is_unit:
        raise UnitIdealError("the ideal is the whole ring")
    return MonomialIdeal.from_exponents(order.n, basis.leading_monomials())


def ideal_membership(f: Polynomial, basis: GroebnerBasis) -> bool:
    return normal_form(f, basis.generators, basis.order).is_zero()


def ideal_contains(big: Sequence[Polynomial], small: Sequence[Polynomial], order: Optional[TermOrder] = None) -> bool:
    """(small) ⊆ (big)."""
    order = order or TermOrder.degrevlex(big[0].n)
    basis = buchberger(big, order)
    return all(ideal_membership(f, basis) for f in small)


def _lift(f: Polynomial, extra: int = 1) -> Polynomial:
    return Polynomial(f.n + extra, {exps + (0,) * extra: c for exps, c in f.terms.items()})


def radical_membership(f: Polynomial, gens: Sequence[Polynomial], degree_cap: Optional[int] = None) -> bool:
    """f ∈ √(gens) iff 1 ∈ (gens, 1 − y·f) with y a new last variable."""
    if f.is_zero():
        return True
    n = f.n
    y = Polynomial.variable(n + 1, n + 1)
    extended = [_lift(g) for g in gens] + [Polynomial.constant(n + 1, 1) - y * _lift(f)]
    basis = buchberger(extended, TermOrder.degrevlex(n + 1), degree_cap)
    return basis.is_unit
