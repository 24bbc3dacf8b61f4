from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from sympy import GF, QQ, Matrix, isprime
from sympy.polys.matrices import DomainMatrix

from config.settings import settings

from ..models.complex import SimplicialComplex, enumerate_faces
from ..utils.logger import setup_logger

logger = setup_logger(__name__)


def resolve_field(field_char: Optional[int]) -> int:
    char = settings.field_char if field_char is None else int(field_char)
    if char != 0 and not isprime(char):
        raise ValueError(f"field characteristic must be 0 or a prime, got {char}")
    return char


def _domain(field_char: int):
    return QQ if field_char == 0 else GF(field_char)


def _rank(rows: List[List[int]], field_char: int) -> int:
    if not rows or not rows[0]:
        return 0
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(_domain(field_char)).rank()


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _boundary(upper: Sequence[int], lower_index: Dict[int, int]) -> List[List[int]]:
    """Matrix of ∂ from the faces in ``upper`` to one dimension lower."""
    rows = [[0] * len(upper) for _ in range(len(lower_index))]
    for col, face in enumerate(upper):
        sign = 1
        bits = face
        while bits:
            low = bits & -bits
            rows[lower_index[face & ~low]][col] = sign
            sign = -sign
            bits &= bits - 1
    return rows


def face_count(maximal: Sequence[int]) -> int:
    """Cheap upper bound for the number of faces spanned by ``maximal``."""
    return sum(1 << _popcount(mask) for mask in maximal)


def reduced_homology_of(maximal: Sequence[int], field_char: int = 0) -> List[int]:
    """dim H̃_i for i = −1..top of the face family generated by ``maximal`` bitmasks.

    ``[0]`` is the complex {∅}; an empty list is the void complex and has no homology.
    """
    if not maximal:
        return []
    top = max(_popcount(mask) for mask in maximal) - 1
    common = maximal[0]
    for mask in maximal[1:]:
        common &= mask
    if common:
        # cone over any shared vertex
        return [0] * (top + 2)

    by_dim: Dict[int, List[int]] = {d: [] for d in range(-1, top + 1)}
    for mask in enumerate_faces(maximal):
        by_dim[_popcount(mask) - 1].append(mask)
    index = {d: {face: i for i, face in enumerate(sorted(faces))} for d, faces in by_dim.items()}

    ranks = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        upper = sorted(by_dim[d])
        ranks[d] = _rank(_boundary(upper, index[d - 1]), field_char)
    return [len(by_dim[d]) - ranks[d] - ranks[d + 1] for d in range(-1, top + 1)]


def reduced_homology(complex_: SimplicialComplex, field_char: Optional[int] = None) -> List[int]:
    """[dim H̃_{−1}, dim H̃_0, ..., dim H̃_{dim Δ}] over ℚ or 𝔽_p."""
    return reduced_homology_of(list(complex_.masks), resolve_field(field_char))


def reduced_euler_characteristic(complex_: SimplicialComplex) -> int:
    """Σ (−1)^i f_i over i ≥ −1."""
    return sum((-1) ** (i - 1) * count for i, count in enumerate(complex_.f_vector()))
