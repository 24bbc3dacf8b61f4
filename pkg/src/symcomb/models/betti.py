from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import sympy as sp


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers β_{i,j} of S/I for i ≥ 1.

    β_{0,0} = 1 is implicit and only appears in the rendered grid. Regularity
    follows the quotient convention reg(S/I) = max{j - i}; reg(I) is one more.
    """

    entries: Dict[Tuple[int, int], int]
    ambient_n: int
    field_char: int = 0

    def __post_init__(self) -> None:
        cleaned = {}
        for (i, j), value in self.entries.items():
            if value < 0:
                raise ValueError("Betti numbers are nonnegative")
            if i < 1:
                raise ValueError("only homological degrees i >= 1 are stored")
            if value:
                cleaned[(int(i), int(j))] = int(value)
        object.__setattr__(self, "entries", dict(sorted(cleaned.items())))

    def get(self, i: int, j: int) -> int:
        if (i, j) == (0, 0):
            return 1
        return self.entries.get((i, j), 0)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def regularity(self) -> int:
        """reg(S/I)."""
        return max((j - i for i, j in self.entries), default=0)

    @property
    def ideal_regularity(self) -> int:
        return self.regularity + 1

    def totals(self) -> Dict[int, int]:
        totals: Dict[int, int] = {0: 1}
        for (i, _), value in self.entries.items():
            totals[i] = totals.get(i, 0) + value
        return totals

    def k_polynomial(self) -> sp.Expr:
        """Numerator of the Hilbert series over (1 - z)^n."""
        z = sp.Symbol("z")
        expr = sp.Integer(1)
        for (i, j), value in self.entries.items():
            expr += (-1) ** i * value * z**j
        return sp.expand(expr)

    def multiplicity(self, dim: int) -> int:
        """e(S/I) read off the Hilbert series, given the Krull dimension of S/I."""
        z = sp.Symbol("z")
        codim = self.ambient_n - dim
        h = sp.cancel(self.k_polynomial() / (1 - z) ** codim)
        return int(h.subs(z, 1))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "field_char": self.field_char,
            "n": self.ambient_n,
            "betti": [[i, j, v] for (i, j), v in self.entries.items()],
            "pd": self.projective_dimension,
            "reg": self.regularity,
        }

    def __str__(self) -> str:
        pd = self.projective_dimension
        reg = self.regularity
        totals = self.totals()
        columns = list(range(pd + 1))
        grid = [[self.get(i, i + r) for i in columns] for r in range(reg + 1)]
        widths = [
            max(len(str(i)), len(str(totals.get(i, 0))), *(len(str(row[i])) for row in grid))
            for i in columns
        ]
        lines = [
            " ".join([f"{'':>6}"] + [f"{i:>{widths[i]}}" for i in columns]),
            " ".join([f"{'total:':>6}"] + [f"{totals.get(i, 0):>{widths[i]}}" for i in columns]),
        ]
        for r, row in enumerate(grid):
            cells = [f"{(str(v) if v else '.'):>{widths[i]}}" for i, v in enumerate(row)]
            lines.append(" ".join([f"{str(r) + ':':>6}"] + cells))
        return "\n".join(lines)


@dataclass(frozen=True)
class MonomialInvariants:
    pd: int
    depth: int
    reg: int
    height: int
    dim: int
    is_cm: bool
    method: str
    betti: Optional[BettiTable] = field(default=None, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pd": self.pd,
            "depth": self.depth,
            "reg": self.reg,
            "height": self.height,
            "dim": self.dim,
            "is_CM": self.is_cm,
            "method": self.method,
        }


@dataclass(frozen=True)
class EisenbudGotoReport:
    holds: bool
    reg: int
    e: int
    height: int

    def to_dict(self) -> Dict[str, Any]:
        return {"holds": self.holds, "reg": self.reg, "e": self.e, "ht": self.height}
