from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
import json
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from ..exceptions import EmptyInput, VertexOutOfRange

Face = Tuple[int, ...]


def face_mask(face: Iterable[int]) -> int:
    mask = 0
    for vertex in face:
        mask |= 1 << (vertex - 1)
    return mask


def mask_face(mask: int) -> Face:
    face = []
    vertex = 1
    while mask:
        if mask & 1:
            face.append(vertex)
        mask >>= 1
        vertex += 1
    return tuple(face)


def maximal_masks(masks: Iterable[int]) -> List[int]:
    """Inclusion-maximal members of a family of bitmasks, deduplicated."""
    unique = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    kept: List[int] = []
    for mask in unique:
        if not any(mask & other == mask for other in kept):
            kept.append(mask)
    return kept


def canonical_facets(faces: Iterable[Iterable[int]]) -> Tuple[Face, ...]:
    return tuple(sorted(tuple(sorted(set(face))) for face in faces))


@dataclass(frozen=True)
class FacetWitness:
    """A violating (F, G, i) triple of an exchange test."""

    facet_f: Face
    facet_g: Face
    element_i: int

    def __post_init__(self) -> None:
        if self.element_i not in self.facet_f:
            raise ValueError("witness element must belong to facet_f")

    def to_dict(self) -> Dict[str, Any]:
        return {"F": list(self.facet_f), "G": list(self.facet_g), "i": self.element_i}


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on [n] given by its facets.

    Facets are sorted tuples of 1-based vertices, listed in lexicographic order,
    so two complexes are equal exactly when they have the same facets. The void
    complex and the complex {∅} are not representable.
    """

    n: int
    facets: Tuple[Face, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        facets = canonical_facets(self.facets)
        if not facets:
            raise EmptyInput("a complex needs at least one facet")
        for facet in facets:
            if not facet:
                raise EmptyInput("facets must be nonempty")
            if facet[0] < 1 or facet[-1] > self.n:
                raise VertexOutOfRange(f"facet {facet} is not a subset of [{self.n}]")
        masks = [face_mask(facet) for facet in facets]
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate facets")
        for a, b in combinations(masks, 2):
            if a & b == a or a & b == b:
                raise ValueError("facets must be pairwise incomparable")
        object.__setattr__(self, "facets", facets)

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(face_mask(facet) for facet in self.facets)

    @property
    def vertices(self) -> Face:
        return mask_face(self.vertex_mask)

    @property
    def vertex_mask(self) -> int:
        mask = 0
        for facet_mask in self.masks:
            mask |= facet_mask
        return mask

    def is_facet(self, face: Iterable[int]) -> bool:
        return tuple(sorted(face)) in self.facet_set

    @property
    def facet_set(self) -> frozenset:
        return frozenset(self.facets)

    def faces(self) -> Iterator[Face]:
        """Every face, the empty face included, ordered by size then lexicographically."""
        for mask in sorted(enumerate_faces(self.masks), key=lambda m: (bin(m).count("1"), mask_face(m))):
            yield mask_face(mask)

    def f_vector(self) -> List[int]:
        """Face counts f_{-1}, f_0, ..., f_{dim}."""
        counts = [0] * (max(len(facet) for facet in self.facets) + 1)
        for mask in enumerate_faces(self.masks):
            counts[bin(mask).count("1")] += 1
        return counts

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "facets": [list(facet) for facet in self.facets]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SimplicialComplex":
        return cls(n=int(data["n"]), facets=tuple(tuple(int(v) for v in f) for f in data["facets"]))

    def __str__(self) -> str:
        body = ", ".join("{" + ",".join(str(v) for v in facet) + "}" for facet in self.facets)
        return f"Δ on [{self.n}]: {body}"


def enumerate_faces(facet_masks: Sequence[int]) -> set:
    """All faces (as bitmasks) of the complex generated by the given maximal faces."""
    faces = {0}
    for facet in facet_masks:
        sub = facet
        while True:
            faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & facet
    return faces
