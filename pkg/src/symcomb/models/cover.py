from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple, Union

from ..exceptions import InputFormatError
from .complex import Face, SimplicialComplex

WeightsLike = Union[None, Sequence[int], Mapping[Tuple[int, ...], int]]


@dataclass(frozen=True)
class WeightedComplex:
    """A pair (Δ, ω): one positive integer weight per facet, aligned with ``complex.facets``."""

    complex: SimplicialComplex
    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        if len(weights) != len(self.complex.facets):
            raise ValueError("exactly one weight per facet is required")
        if any(w < 1 for w in weights):
            raise ValueError("facet weights must be positive")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def canonical(cls, complex_: SimplicialComplex) -> "WeightedComplex":
        return cls(complex_, (1,) * len(complex_.facets))

    @classmethod
    def build(cls, complex_: SimplicialComplex, weights: WeightsLike = None) -> "WeightedComplex":
        """Accept ``None`` (all ones), a sequence aligned with the facets, or a facet map."""
        if weights is None:
            return cls.canonical(complex_)
        if isinstance(weights, Mapping):
            lookup = {tuple(sorted(k)): int(v) for k, v in weights.items()}
            missing = [f for f in complex_.facets if f not in lookup]
            if missing or len(lookup) != len(complex_.facets):
                raise ValueError("weight map must cover exactly the facets")
            return cls(complex_, tuple(lookup[f] for f in complex_.facets))
        return cls(complex_, tuple(weights))

    @property
    def n(self) -> int:
        return self.complex.n

    @property
    def facets(self) -> Tuple[Face, ...]:
        return self.complex.facets

    @property
    def max_weight(self) -> int:
        return max(self.weights)

    def weight_of(self, facet: Sequence[int]) -> int:
        return self.weights[self.complex.facets.index(tuple(sorted(facet)))]

    def pairs(self):
        return zip(self.complex.facets, self.weights)

    def vertex_bounds(self, k: int) -> Tuple[int, ...]:
        """max_{F ∋ i} kω_F for each vertex (0 for vertices in no facet)."""
        bounds = [0] * self.n
        for facet, w in self.pairs():
            for v in facet:
                bounds[v - 1] = max(bounds[v - 1], k * w)
        return tuple(bounds)

    def is_k_cover(self, alpha: Sequence[int], k: int) -> bool:
        return all(sum(alpha[v - 1] for v in facet) >= k * w for facet, w in self.pairs())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "complex": self.complex.to_dict(),
            "weights": [[index, w] for index, w in enumerate(self.weights)],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeightedComplex":
        try:
            complex_ = SimplicialComplex.from_dict(data["complex"] if "complex" in data else data)
            raw = data.get("weights")
            if raw is None:
                return cls.canonical(complex_)
            weights = [1] * len(complex_.facets)
            for entry in raw:
                index, w = int(entry[0]), int(entry[1])
                weights[index] = w
            return cls(complex_, tuple(weights))
        except (KeyError, IndexError, TypeError) as exc:
            raise InputFormatError(f"bad weighted complex payload: {exc}") from exc


@dataclass(frozen=True)
class KCover:
    alpha: Tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        alpha = tuple(int(a) for a in self.alpha)
        if self.k < 1:
            raise ValueError("k must be positive")
        if any(a < 0 for a in alpha):
            raise ValueError("cover values must be nonnegative")
        if not any(alpha):
            raise ValueError("a cover is a nonzero function")
        object.__setattr__(self, "alpha", alpha)

    @property
    def degree(self) -> int:
        return sum(self.alpha)

    def to_list(self) -> list:
        return list(self.alpha)


class CoverClass(str, Enum):
    NOT_A_COVER = "NotACover"
    COVER = "Cover"
    BASIC = "BasicCover"


@dataclass(frozen=True)
class VariableWeight:
    """λ: strictly positive exact rationals on the vertices."""

    lam: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        lam = tuple(Fraction(x) for x in self.lam)
        if any(x <= 0 for x in lam):
            raise ValueError("variable weights must be strictly positive")
        object.__setattr__(self, "lam", lam)

    def facet_weight(self, facet: Sequence[int]) -> Fraction:
        return sum((self.lam[v - 1] for v in facet), Fraction(0))

    def to_list(self) -> list:
        return [str(x) for x in self.lam]


@dataclass(frozen=True)
class Infeasible:
    """Certificate that no positive λ induces ω."""

    reason: str
    facets: Tuple[Face, ...] = ()
    vertices: Tuple[int, ...] = ()
    forced_values: Tuple[Fraction, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "reason": self.reason,
            "facets": [list(f) for f in self.facets],
            "vertices": list(self.vertices),
            "forced_values": [str(v) for v in self.forced_values],
        }


@dataclass(frozen=True)
class DimensionEstimate:
    dimension: int
    period: int
    start: int
    leading_coefficients: Tuple[Fraction, ...]
    hf_values: Tuple[int, ...]
    multiplicity: Optional[Fraction] = None
    notes: Tuple[str, ...] = field(default_factory=tuple)

    def __int__(self) -> int:
        return self.dimension

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimension": self.dimension,
            "period": self.period,
            "start": self.start,
            "leading_coefficients": [str(c) for c in self.leading_coefficients],
            "hf_values": list(self.hf_values),
            "multiplicity": None if self.multiplicity is None else str(self.multiplicity),
        }
