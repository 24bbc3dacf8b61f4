from __future__ import annotations

from typing import Optional, Tuple

from config.settings import settings

from ..exceptions import NotApplicable, NotSquareFree, ResourceCapExceeded
from ..models.betti import BettiTable, EisenbudGotoReport, MonomialInvariants
from ..models.complex import SimplicialComplex
from ..monomial import complex_of, height_and_dim, minimal_primes
from ..polar import polarize, polarized_variable_count
from ..simplicial import connectivity_degree, dimension, is_pure
from ..utils.logger import setup_logger
from .betti import hochster_betti, koszul_betti
from .homology import resolve_field

logger = setup_logger(__name__)

METHODS = ("auto", "polarize", "lcm")


def betti_table(
    ideal,
    field_char: Optional[int] = None,
    method: str = "polarize",
    var_cap: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> Tuple[BettiTable, str]:
    """Graded Betti numbers of S/I together with the route that produced them.

    ``polarize`` raises ``ResourceCapExceeded`` above the variable cap; only an explicit
    ``auto`` falls back to the lcm route there.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    char = resolve_field(field_char)
    cap = settings.var_cap if var_cap is None else var_cap
    count = polarized_variable_count(ideal)

    if method == "auto":
        method = "polarize" if count <= cap else "lcm"
    if method == "lcm":
        return koszul_betti(ideal, char, max_workers=max_workers), "lcm"
    if count > cap:
        logger.warning("polarization needs %s variables, cap is %s", count, cap)
        raise ResourceCapExceeded(f"polarization needs {count} variables > cap {cap}")

    polarized = polarize(ideal)
    table = hochster_betti(polarized.ideal, char, max_workers=max_workers)
    # polarization keeps the graded Betti numbers; report them over the original ring
    return BettiTable(table.entries, ideal.ambient_n, char), "polarize"


def invariants_of_monomial(
    ideal,
    field_char: Optional[int] = None,
    method: str = "polarize",
    var_cap: Optional[int] = None,
    max_workers: Optional[int] = None,
) -> MonomialInvariants:
    """pd, depth = n − pd, reg(S/I), height, dim and the Cohen–Macaulay test pd = height."""
    table, used = betti_table(ideal, field_char, method, var_cap, max_workers)
    pd = table.projective_dimension
    height, dim = height_and_dim(ideal)
    logger.debug("invariants of %s via %s: pd=%s ht=%s", ideal, used, pd, height)
    return MonomialInvariants(
        pd=pd,
        depth=ideal.ambient_n - pd,
        reg=table.regularity,
        height=height,
        dim=dim,
        is_cm=pd == height,
        method=used,
        betti=table,
    )


def multiplicity(complex_: SimplicialComplex) -> int:
    """e(k[Δ]) for pure Δ: the number of facets."""
    if not is_pure(complex_):
        raise NotApplicable("the facet count is the multiplicity only for pure complexes")
    return len(complex_.facets)


def eisenbud_goto_check(ideal, field_char: Optional[int] = None) -> EisenbudGotoReport:
    """reg(S/I) ≤ e(S/I) − ht(I) for square-free I ⊆ m² connected in codimension one."""
    if not ideal.is_squarefree:
        raise NotSquareFree(f"{ideal} is not square-free")
    if ideal.is_zero or any(g.degree == 1 for g in ideal.generators):
        raise NotApplicable("the ideal must be nonzero and contained in m^2")
    height, dim = height_and_dim(ideal)
    primes = minimal_primes(ideal)
    if len(primes) > 1 and connectivity_degree(primes, ideal.ambient_n) < dim - 1:
        raise NotApplicable("Δ(I) is not connected in codimension one")

    complex_ = complex_of(ideal)
    top = dimension(complex_)
    e = sum(1 for facet in complex_.facets if len(facet) - 1 == top)
    table = hochster_betti(ideal, field_char)
    reg = table.regularity
    return EisenbudGotoReport(holds=reg <= e - height, reg=reg, e=e, height=height)
