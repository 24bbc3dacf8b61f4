from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy

from ..exceptions import MatrixTooSmall, OutOfRange
from ..models.partition import BiDiagram, MinorsParams, Partition
from ..utils.logger import setup_logger
from .pieri import admissible_partitions, pieri_multiplicity, predecessors

logger = setup_logger(__name__)


def _relation(t: int, i: int) -> BiDiagram:
    if t % 2 == 0:
        a, b = 3 * t // 2 - i + 1, 2 * (i - 1)
        c, d = 2 * (t - i + 1), t // 2 + i - 1
    else:
        a, b = (3 * t - 1) // 2 - i + 1, 2 * (i - 1) + 1
        c, d = 2 * (t - i + 1) - 1, (t + 1) // 2 + i - 1
    return BiDiagram(Partition((a, a, b)), Partition((c, d, d)))


def _shape_family(t: int) -> List[BiDiagram]:
    """Every degree-3 shape relation for t-minors, ignoring the matrix size."""
    return [_relation(t, i) for i in range(1, t // 2 + 1)]


def shape_relations(params: MinorsParams) -> List[BiDiagram]:
    """Asymmetric degree-3 bi-diagrams (γ^i|λ^i) whose relations fit into an m×n matrix."""
    params.require_generic()
    m, n, t = params.m, params.n, params.t
    if t % 2 == 0:
        low = max(1, ceil(Fraction(3 * t, 2) - m + 1), ceil(t - Fraction(n, 2) + 1))
    else:
        low = max(1, ceil(Fraction(3 * t - 1, 2) - m + 1), ceil(t - Fraction(n + 1, 2)))
    found = [_relation(t, i) for i in range(low, t // 2 + 1)]
    logger.debug("shape relations for %s: %s", params.to_dict(), [str(bi) for bi in found])
    return found


def young_diagram(lam: Partition, cell: str = "#") -> List[str]:
    return [cell * part for part in lam.parts]


def render_bidiagram(bi: BiDiagram) -> str:
    left = young_diagram(bi.gamma)
    right = young_diagram(bi.lam)
    width = max((len(row) for row in left), default=0)
    rows = max(len(left), len(right))
    lines = []
    for index in range(rows):
        g = left[index] if index < len(left) else ""
        l_ = right[index] if index < len(right) else ""
        lines.append(f"{g.ljust(width)} | {l_}".rstrip())
    return "\n".join(lines)


def no_other_shapes(t_max: int, part_max: int, d_max: int) -> List[Tuple[int, BiDiagram]]:
    """Asymmetric multiplicity-one bi-diagrams with one symmetric predecessor that are
    not degree-3 shape relations. An empty list confirms the classification."""
    offenders: List[Tuple[int, BiDiagram]] = []
    for t in range(2, t_max + 1):
        family = set(_shape_family(t))
        family |= {bi.swapped() for bi in family}
        for d in range(3, d_max + 1):
            unique = {}
            for lam in admissible_partitions(t, d, part_max):
                if pieri_multiplicity(lam, t) != 1:
                    continue
                preds = predecessors(lam, t)
                if len(preds) == 1:
                    unique[lam] = preds[0]
            for gamma, g_pred in unique.items():
                for lam, l_pred in unique.items():
                    if gamma == lam or g_pred != l_pred:
                        continue
                    bi = BiDiagram(gamma, lam)
                    if d == 3 and bi in family:
                        continue
                    offenders.append((t, bi))
    if offenders:
        logger.warning("%s unexpected bi-diagrams, first %s", len(offenders), offenders[0][1])
    return offenders


def _det(matrix: Sequence[Sequence[int]], rows: Sequence[int], cols: Sequence[int]) -> int:
    return int(sympy.Matrix([[matrix[r][c] for c in cols] for r in rows]).det(method="bareiss"))


def _relation_vanishes(t: int, matrix: Sequence[Sequence[int]]) -> bool:
    """3×3 determinant of t-minors on rows {0..t−3}∪pair, columns {0..t−2}∪{t−2+b}."""
    head_rows = list(range(t - 2))
    head_cols = list(range(t - 1))
    row_sets = [head_rows + list(pair) for pair in combinations((t - 2, t - 1, t), 2)]
    col_sets = [head_cols + [t - 2 + b] for b in (1, 2, 3)]
    minors = [[_det(matrix, rows, cols) for cols in col_sets] for rows in row_sets]
    return sympy.Matrix(minors).det(method="bareiss") == 0


def _plucker_vanishes(matrix: Sequence[Sequence[int]]) -> bool:
    def p(i: int, j: int) -> int:
        return _det(matrix, (0, 1), (i, j))

    return p(0, 1) * p(2, 3) - p(0, 2) * p(1, 3) + p(0, 3) * p(1, 2) == 0


def verify_det_relations(t: int, matrix: Sequence[Sequence[int]]) -> bool:
    """Evaluate the degree-3 determinantal relation on every (t+1)×(t+2) submatrix,
    plus the Plücker relation on every 2×4 submatrix when t = 2."""
    if t < 2:
        raise OutOfRange(f"relations start at t=2, got {t}")
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if any(len(row) != cols for row in matrix):
        raise ValueError("matrix rows must have equal length")
    if rows < t + 2 or cols < t + 2:
        raise MatrixTooSmall(f"need at least {t + 2}×{t + 2}, got {rows}×{cols}")

    for row_pick in combinations(range(rows), t + 1):
        for col_pick in combinations(range(cols), t + 2):
            sub = [[matrix[r][c] for c in col_pick] for r in row_pick]
            if not _relation_vanishes(t, sub):
                logger.info("relation fails on rows %s, columns %s", row_pick, col_pick)
                return False
    if t == 2:
        for row_pick in combinations(range(rows), 2):
            for col_pick in combinations(range(cols), 4):
                sub = [[matrix[r][c] for c in col_pick] for r in row_pick]
                if not _plucker_vanishes(sub):
                    logger.info("Plücker relation fails on rows %s, columns %s", row_pick, col_pick)
                    return False
    return True


def random_integer_matrix(rows: int, cols: int, seed: Optional[int] = None, bound: int = 9) -> List[List[int]]:
    rng = np.random.default_rng(seed)
    return [[int(x) for x in row] for row in rng.integers(-bound, bound + 1, size=(rows, cols))]
