from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Optional, Tuple

from .complex import FacetWitness
from .monomial import MonomialIdeal

IndexedVariable = Tuple[int, int]


@dataclass(frozen=True)
class PolarizedIdeal:
    """Square-free lift of ``source`` in the doubly indexed variables x_{i,j}.

    ``var_map[k]`` is the pair (i, j) carried by flat variable k+1. Blocks run by i
    ascending and j ascending inside a block.
    """

    ideal: MonomialIdeal
    var_map: Tuple[IndexedVariable, ...]
    source: MonomialIdeal

    def __post_init__(self) -> None:
        if not self.ideal.is_squarefree:
            raise ValueError("a polarized ideal is square-free")
        if len(self.var_map) != self.ideal.ambient_n:
            raise ValueError("var_map must name every polarized variable")

    @property
    def levels(self) -> Tuple[int, ...]:
        top = [0] * self.source.ambient_n
        for i, j in self.var_map:
            top[i - 1] = max(top[i - 1], j)
        return tuple(top)

    def indexed(self, flat_subset) -> FrozenSet[IndexedVariable]:
        return frozenset(self.var_map[k - 1] for k in flat_subset)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ideal": self.ideal.to_dict(),
            "variables": [list(v) for v in self.var_map],
            "source": self.source.to_dict(),
        }


@dataclass(frozen=True, order=True)
class IndexedPrime:
    """℘_{F,a} = (x_{i_1,a_1}, ..., x_{i_d,a_d})."""

    base_set: Tuple[int, ...]
    levels: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.base_set:
            raise ValueError("an indexed prime needs a nonempty base set")
        if len(self.base_set) != len(self.levels):
            raise ValueError("one level per base element")
        if list(self.base_set) != sorted(set(self.base_set)):
            raise ValueError("base set must be strictly increasing")
        if any(a < 1 for a in self.levels):
            raise ValueError("levels are positive")

    @property
    def total_level(self) -> int:
        return sum(self.levels)

    @property
    def variables(self) -> FrozenSet[IndexedVariable]:
        return frozenset(zip(self.base_set, self.levels))

    @property
    def height(self) -> int:
        return len(self.base_set)

    def to_list(self) -> list:
        return [[i, a] for i, a in zip(self.base_set, self.levels)]

    def __str__(self) -> str:
        return "(" + ", ".join(f"x{i},{a}" for i, a in zip(self.base_set, self.levels)) + ")"


@dataclass(frozen=True)
class ObstructionResult:
    """Outcome of the localized-connectedness test. ``Pass`` does not certify CM."""

    obstructed: bool
    witness: Optional[FacetWitness] = None
    start: Optional[IndexedPrime] = None
    target: Optional[IndexedPrime] = None
    local_primes: Tuple[IndexedPrime, ...] = ()
    witnesses_checked: int = 0

    @property
    def verdict(self) -> str:
        return "Obstructed" if self.obstructed else "Pass"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness else None,
            "start": self.start.to_list() if self.start else None,
            "target": self.target.to_list() if self.target else None,
            "local_primes": [p.to_list() for p in self.local_primes],
            "witnesses_checked": self.witnesses_checked,
        }
