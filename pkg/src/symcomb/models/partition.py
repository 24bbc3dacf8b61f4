from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

from ..exceptions import InputFormatError, OutOfRange


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts (rows of the Young diagram).

    ``height`` follows the λ₁ convention used by the minors module, so a
    diagram of height h needs at least h basis vectors to be nonzero.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts if int(p) != 0)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        try:
            return cls(tuple(int(p) for p in text.replace("(", "").replace(")", "").split(",") if p.strip()))
        except ValueError as exc:
            raise InputFormatError(f"bad partition {text!r}: {exc}") from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, index: int) -> int:
        """0-based row length, zero beyond the last row."""
        return self.parts[index] if index < len(self.parts) else 0

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def is_fat_hook(self) -> bool:
        return len(set(self.parts)) == 2

    def to_list(self) -> list:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True, order=True)
class BiDiagram:
    """(γ|λ): γ on the row space W, λ on the column space V."""

    gamma: Partition
    lam: Partition

    def __post_init__(self) -> None:
        if self.gamma.size != self.lam.size:
            raise ValueError("both diagrams of a bi-diagram have the same size")

    @property
    def is_symmetric(self) -> bool:
        return self.gamma == self.lam

    def swapped(self) -> "BiDiagram":
        return BiDiagram(self.lam, self.gamma)

    def to_list(self) -> list:
        return [self.gamma.to_list(), self.lam.to_list()]

    def __str__(self) -> str:
        return f"({','.join(map(str, self.gamma.parts))}|{','.join(map(str, self.lam.parts))})"


@dataclass(frozen=True)
class MinorsParams:
    """Shape data of the t-minors of an m×n matrix of indeterminates."""

    m: int
    n: int
    t: int
    d: Optional[int] = None

    def __post_init__(self) -> None:
        if not 1 <= self.t <= self.m <= self.n:
            raise OutOfRange(f"need 1 <= t <= m <= n, got t={self.t}, m={self.m}, n={self.n}")
        if self.d is not None and self.d < 1:
            raise OutOfRange("degree d must be positive")

    @property
    def is_generic(self) -> bool:
        """Outside the polynomial-ring and Grassmannian cases."""
        return 1 < self.t < self.m and self.n > self.t + 1

    def require_generic(self) -> None:
        if not self.is_generic:
            raise OutOfRange(
                f"formula needs 1 < t < m and n > t+1, got t={self.t}, m={self.m}, n={self.n}"
            )

    def to_dict(self) -> Dict[str, Any]:
        data = {"m": self.m, "n": self.n, "t": self.t}
        if self.d is not None:
            data["d"] = self.d
        return data


def partitions_of(total: int, max_parts: int, max_part: Optional[int] = None) -> Iterable[Partition]:
    """All partitions of ``total`` with at most ``max_parts`` rows, largest first."""
    cap = total if max_part is None else min(total, max_part)

    def build(remaining: int, bound: int, slots: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        for part in range(min(bound, remaining), 0, -1):
            if part * slots < remaining:
                break
            yield from build(remaining - part, part, slots - 1, prefix + (part,))

    yield from build(total, cap, max_parts, ())


@dataclass(frozen=True)
class RegularityInfo:
    """a-invariant and regularity of the algebra of t-minors."""

    case: str
    a: int
    reg: int
    k0: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"case": self.case, "a": self.a, "reg": self.reg}
        if self.k0 is not None:
            data["k0"] = self.k0
        return data


@dataclass(frozen=True)
class RelationBounds:
    colbound: int
    degbound: int
    reg_bound: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return {"colbound": self.colbound, "degbound": self.degbound, "reg_bound": self.reg_bound}


@dataclass(frozen=True)
class IdentityReport:
    is_identity: bool
    is_homogeneous: bool
    is_primitive: bool
    is_homogeneous_primitive: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "is_identity": self.is_identity,
            "is_homogeneous": self.is_homogeneous,
            "is_primitive": self.is_primitive,
            "is_homogeneous_primitive": self.is_homogeneous_primitive,
        }
