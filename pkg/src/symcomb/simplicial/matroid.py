from __future__ import annotations

from typing import Iterator, Optional, Tuple

from ..models.complex import FacetWitness, SimplicialComplex, mask_face
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

ExchangeResult = Tuple[bool, Optional[FacetWitness]]


def _bits(mask: int):
    vertex = 1
    while mask:
        if mask & 1:
            yield vertex
        mask >>= 1
        vertex += 1


def exchange_violations(complex_: SimplicialComplex, symmetric: bool = False) -> Iterator[FacetWitness]:
    """Every violating triple, scanned as (F, i, G) so the first one is the smallest."""
    masks = complex_.masks
    facets = set(masks)
    for f_mask in masks:
        for i in _bits(f_mask):
            bit_i = 1 << (i - 1)
            base = f_mask & ~bit_i
            for g_mask in masks:
                if g_mask & bit_i:
                    continue
                found = False
                for j in _bits(g_mask):
                    bit_j = 1 << (j - 1)
                    if base | bit_j not in facets:
                        continue
                    if symmetric and (g_mask & ~bit_j) | bit_i not in facets:
                        continue
                    found = True
                    break
                if not found:
                    yield FacetWitness(mask_face(f_mask), mask_face(g_mask), i)


def _search(complex_: SimplicialComplex, symmetric: bool) -> ExchangeResult:
    witness = next(exchange_violations(complex_, symmetric), None)
    if witness is None:
        return True, None
    logger.debug("Exchange fails at F=%s G=%s i=%s", witness.facet_f, witness.facet_g, witness.element_i)
    return False, witness


def is_matroid(complex_: SimplicialComplex) -> ExchangeResult:
    """Basis exchange: for all facets F, G and i ∈ F some j ∈ G makes (F∖i)∪j a facet.

    Returns ``(True, None)`` or ``(False, witness)`` with the smallest violating triple.
    """
    return _search(complex_, symmetric=False)


def symmetric_exchange_holds(complex_: SimplicialComplex) -> ExchangeResult:
    """Like :func:`is_matroid` but (G∖j)∪i must be a facet as well."""
    return _search(complex_, symmetric=True)
