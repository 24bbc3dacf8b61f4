from __future__ import annotations

from dataclasses import dataclass
import json
import re
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from ..exceptions import AmbientMismatch, InputFormatError, UnitIdealError

_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


@dataclass(frozen=True)
class Monomial:
    """x^α as a fixed-length exponent vector."""

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        exponents = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exponents):
            raise ValueError("exponents must be nonnegative")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, index: int) -> "Monomial":
        exps = [0] * n
        exps[index - 1] = 1
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, n: int, support: Iterable[int]) -> "Monomial":
        exps = [0] * n
        for index in support:
            exps[index - 1] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError("quotient requires divisibility")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Graded order with x1 > x2 > ... inside each degree."""
        return (self.degree, tuple(-e for e in self.exponents))

    def to_text(self) -> str:
        factors = []
        for index, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"x{index}")
            elif e > 1:
                factors.append(f"x{index}^{e}")
        return "*".join(factors) if factors else "1"

    @classmethod
    def parse(cls, text: str, n: int) -> "Monomial":
        """Parse ``x1^2*x3`` style text into an exponent vector of length n."""
        cleaned = (text or "").replace(" ", "")
        if not cleaned:
            raise InputFormatError("empty monomial")
        exps = [0] * n
        if cleaned == "1":
            return cls(tuple(exps))
        for factor in cleaned.split("*"):
            match = _FACTOR_RE.match(factor)
            if not match:
                raise InputFormatError(f"bad monomial factor: {factor!r}")
            index = int(match.group(1))
            if index < 1 or index > n:
                raise InputFormatError(f"variable x{index} outside 1..{n}")
            exps[index - 1] += int(match.group(2) or 1)
        return cls(tuple(exps))

    def __str__(self) -> str:
        return self.to_text()


def _check_ambient(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise AmbientMismatch(f"monomials live in {a.n} and {b.n} variables")


def minimalize(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Drop every monomial divisible by another one; result in canonical order."""
    ordered = sorted(set(monomials), key=Monomial.sort_key)
    kept: List[Monomial] = []
    for mono in ordered:
        if not any(g.divides(mono) for g in kept):
            kept.append(mono)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A proper monomial ideal by its minimal generators.

    The empty generator tuple is the zero ideal. The unit ideal is rejected.
    """

    ambient_n: int
    generators: Tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        if self.ambient_n < 1:
            raise ValueError("ambient variable count must be positive")
        for gen in self.generators:
            if gen.n != self.ambient_n:
                raise AmbientMismatch(
                    f"generator {gen} has {gen.n} variables, ideal has {self.ambient_n}"
                )
        gens = tuple(minimalize(self.generators))
        if any(g.degree == 0 for g in gens):
            raise UnitIdealError("the unit ideal is not representable")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_exponents(cls, n: int, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(n, tuple(Monomial(tuple(v)) for v in vectors))

    @classmethod
    def from_supports(cls, n: int, supports: Iterable[Iterable[int]]) -> "MonomialIdeal":
        return cls(n, tuple(Monomial.from_support(n, s) for s in supports))

    @classmethod
    def prime(cls, n: int, variables: Iterable[int]) -> "MonomialIdeal":
        """℘_F = (x_i : i ∈ F)."""
        return cls(n, tuple(Monomial.variable(n, i) for i in sorted(set(variables))))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    def max_exponents(self) -> Tuple[int, ...]:
        """Largest exponent of each variable across the generators."""
        top = [0] * self.ambient_n
        for gen in self.generators:
            for index, e in enumerate(gen.exponents):
                top[index] = max(top[index], e)
        return tuple(top)

    def contains(self, mono: Monomial) -> bool:
        if mono.n != self.ambient_n:
            raise AmbientMismatch("monomial and ideal live in different rings")
        return any(g.divides(mono) for g in self.generators)

    def __contains__(self, mono: Monomial) -> bool:
        return self.contains(mono)

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.ambient_n, "gens": [list(g.exponents) for g in self.generators]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MonomialIdeal":
        try:
            return cls.from_exponents(int(data["n"]), data["gens"])
        except (KeyError, TypeError) as exc:
            raise InputFormatError(f"bad ideal payload: {exc}") from exc

    def to_text(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(g.to_text() for g in self.generators) + ")"

    def __str__(self) -> str:
        return self.to_text()
