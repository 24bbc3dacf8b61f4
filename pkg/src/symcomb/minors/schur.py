from __future__ import annotations

from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import Dict, List, Optional, Set, Tuple

from config.settings import settings

from ..exceptions import OracleTooLarge, VerificationError
from ..models.partition import BiDiagram, MinorsParams, Partition
from ..utils.logger import setup_logger
from .pieri import admissible_partitions, multiplicity_n

logger = setup_logger(__name__)

Exponents = Tuple[int, ...]


def dim_schur(lam: Partition, dim_v: int) -> int:
    """dim L_λV for dim V = dim_v: hook-content product on the transpose of λ."""
    if lam.height > dim_v:
        return 0
    shape = lam.transpose()
    columns = lam
    numerator = 1
    denominator = 1
    for row, length in enumerate(shape.parts):
        for col in range(length):
            numerator *= dim_v + col - row
            denominator *= (length - col) + (columns.part(col) - row) - 1
    return numerator // denominator


def count_tableaux(lam: Partition, dim_v: int) -> int:
    """Fillings of λ from [dim_v]: rows strictly increasing, columns weakly increasing."""
    cells = [(row, col) for row, length in enumerate(lam.parts) for col in range(length)]
    filling: Dict[Tuple[int, int], int] = {}

    def fill(index: int) -> int:
        if index == len(cells):
            return 1
        row, col = cells[index]
        low = 1
        if col > 0:
            low = max(low, filling[(row, col - 1)] + 1)
        if row > 0:
            low = max(low, filling[(row - 1, col)])
        total = 0
        for value in range(low, dim_v + 1):
            filling[(row, col)] = value
            total += fill(index + 1)
        filling.pop((row, col), None)
        return total

    return fill(0)


def hf_At(params: MinorsParams, d: int) -> int:
    """Σ over d-admissible λ with ht(λ) ≤ m of dim L_λW · dim L_λV."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    total = 0
    for lam in admissible_partitions(params.t, d, params.m):
        total += dim_schur(lam, params.m) * dim_schur(lam, params.n)
    return total


def _diagonals(m: int, n: int, size: int) -> List[Exponents]:
    """Initial terms x_{i1 j1}⋯x_{ir jr} of the r-minors under a diagonal order."""
    found: List[Exponents] = []
    for rows in combinations(range(m), size):
        for cols in combinations(range(n), size):
            exps = [0] * (m * n)
            for i, j in zip(rows, cols):
                exps[i * n + j] = 1
            found.append(tuple(exps))
    return found


def _add(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def hf_At_oracle(params: MinorsParams, d: int, max_td: Optional[int] = None) -> int:
    """Count distinct products of diagonal initial terms whose sizes form a d-admissible shape."""
    cap = settings.oracle_max_td if max_td is None else max_td
    m, n, t = params.m, params.n, params.t
    if t * d > cap:
        logger.warning("oracle refused: t*d = %s exceeds %s", t * d, cap)
        raise OracleTooLarge(f"t*d = {t * d} exceeds the oracle cap {cap}")
    if d == 0:
        return 1

    diagonals = {size: _diagonals(m, n, size) for size in range(1, m + 1)}
    zero: Exponents = (0,) * (m * n)
    seen: Set[Exponents] = set()
    for lam in admissible_partitions(t, d, m):
        counts: Dict[int, int] = {}
        for part in lam.parts:
            counts[part] = counts.get(part, 0) + 1
        blocks = []
        for size, count in counts.items():
            block = set()
            for choice in combinations_with_replacement(diagonals[size], count):
                mono = zero
                for term in choice:
                    mono = _add(mono, term)
                block.add(mono)
            blocks.append(block)
        for pieces in product(*blocks):
            mono = zero
            for piece in pieces:
                mono = _add(mono, piece)
            seen.add(mono)
    logger.debug("oracle for %s, d=%s: %s monomials", params.to_dict(), d, len(seen))
    return len(seen)


def check_hf_At(params: MinorsParams, d: int, max_td: Optional[int] = None) -> int:
    value = hf_At(params, d)
    oracle = hf_At_oracle(params, d, max_td)
    if value != oracle:
        raise VerificationError(f"HF({d}) = {value} from Schur modules but {oracle} from the oracle")
    return value


def tensor_sum_rule(params: MinorsParams, d: int) -> Tuple[int, int]:
    """(Σ n(γ,λ)·dim L_γW·dim L_λV, (C(m,t)·C(n,t))^d); the two agree."""
    m, n, t = params.m, params.n, params.t
    if d < 1:
        raise ValueError(f"degree must be positive, got {d}")
    total = sum(
        multiplicity_n(BiDiagram(g, l_), t) * dim_schur(g, m) * dim_schur(l_, n)
        for g in admissible_partitions(t, d, m)
        for l_ in admissible_partitions(t, d, n)
    )
    return total, (comb(m, t) * comb(n, t)) ** d
