from __future__ import annotations

from typing import Iterable, List

from ..exceptions import DualHasEmptyFacet, EmptyInput, VertexOutOfRange
from ..models.complex import Face, SimplicialComplex, face_mask, mask_face, maximal_masks


def from_facets(n: int, sets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex generated by ``sets``; members that are not inclusion-maximal are dropped."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    masks: List[int] = []
    for raw in sets:
        face = tuple(sorted(set(int(v) for v in raw)))
        for vertex in face:
            if vertex < 1 or vertex > n:
                raise VertexOutOfRange(f"vertex {vertex} outside [1, {n}]")
        if face:
            masks.append(face_mask(face))
    if not masks:
        raise EmptyInput("at least one nonempty face is required")
    return SimplicialComplex(n, tuple(mask_face(m) for m in maximal_masks(masks)))


def simplex(n: int, vertices: Iterable[int] = ()) -> SimplicialComplex:
    face = tuple(vertices) or tuple(range(1, n + 1))
    return from_facets(n, [face])


def dimension(complex_: SimplicialComplex) -> int:
    return max(len(facet) for facet in complex_.facets) - 1


def is_pure(complex_: SimplicialComplex) -> bool:
    return len({len(facet) for facet in complex_.facets}) == 1


def dual(complex_: SimplicialComplex) -> SimplicialComplex:
    """Complex whose facets are the complements [n] ∖ F."""
    full = (1 << complex_.n) - 1
    complements = [full & ~mask for mask in complex_.masks]
    if any(mask == 0 for mask in complements):
        raise DualHasEmptyFacet("a facet equals [n], so its complement is empty")
    return from_facets(complex_.n, [mask_face(m) for m in complements])


def stanley_reisner_primes(complex_: SimplicialComplex) -> List[Face]:
    """Variable sets of the minimal primes of I_Δ: one complement per facet.

    A facet equal to [n] gives the empty set (the zero ideal).
    """
    full = (1 << complex_.n) - 1
    return [mask_face(full & ~mask) for mask in complex_.masks]
