from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import re
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import AmbientMismatch, InputFormatError
from .complex import SimplicialComplex
from .monomial import MonomialIdeal

Exponents = Tuple[int, ...]

_TERM_SPLIT_RE = re.compile(r"(?=[+-])")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")

ORDER_KINDS = ("lex", "degrevlex", "weighted")


@dataclass(frozen=True)
class TermOrder:
    """A monomial order on n variables.

    ``priority`` lists the variables from largest to smallest (default
    x1 > x2 > ... > xn). A weighted order compares ω-degrees first and breaks
    ties with ``tiebreak``.
    """

    kind: str = "degrevlex"
    n: int = 0
    weights: Tuple[int, ...] = ()
    tiebreak: str = "degrevlex"
    priority: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.tiebreak not in ("lex", "degrevlex"):
            raise ValueError(f"unknown tiebreak {self.tiebreak!r}")
        priority = tuple(self.priority) or tuple(range(1, self.n + 1))
        if sorted(priority) != list(range(1, self.n + 1)):
            raise ValueError("priority must be a permutation of 1..n")
        object.__setattr__(self, "priority", priority)
        weights = tuple(int(w) for w in self.weights)
        if self.kind == "weighted":
            if len(weights) != self.n:
                raise ValueError("one weight per variable")
            if any(w < 1 for w in weights):
                raise ValueError("order weights must be positive")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def lex(cls, n: int, priority: Sequence[int] = ()) -> "TermOrder":
        return cls("lex", n, priority=tuple(priority))

    @classmethod
    def degrevlex(cls, n: int, priority: Sequence[int] = ()) -> "TermOrder":
        return cls("degrevlex", n, priority=tuple(priority))

    @classmethod
    def weighted(cls, weights: Sequence[int], tiebreak: str = "degrevlex", priority: Sequence[int] = ()) -> "TermOrder":
        return cls("weighted", len(weights), tuple(weights), tiebreak, tuple(priority))

    def extended(self, extra: int = 1, weight: int = 1) -> "TermOrder":
        """Same order on n + extra variables; the new ones are the smallest."""
        priority = self.priority + tuple(range(self.n + 1, self.n + extra + 1))
        weights = self.weights + (weight,) * extra if self.kind == "weighted" else ()
        return TermOrder(self.kind, self.n + extra, weights, self.tiebreak, priority)

    def reversed(self) -> "TermOrder":
        return TermOrder(self.kind, self.n, self.weights, self.tiebreak, tuple(reversed(self.priority)))

    def _ordered(self, exps: Exponents) -> Exponents:
        return tuple(exps[p - 1] for p in self.priority)

    def _base_key(self, kind: str, exps: Exponents) -> tuple:
        ordered = self._ordered(exps)
        if kind == "lex":
            return ordered
        return (sum(ordered), tuple(-e for e in reversed(ordered)))

    def key(self, exps: Exponents) -> tuple:
        """Sort key: larger key means larger monomial."""
        if self.kind == "weighted":
            wdeg = sum(w * e for w, e in zip(self.weights, exps))
            return (wdeg, self._base_key(self.tiebreak, exps))
        return self._base_key(self.kind, exps)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind, "priority": list(self.priority)}
        if self.kind == "weighted":
            data["weights"] = list(self.weights)
            data["tiebreak"] = self.tiebreak
        return data


class Polynomial:
    """Sparse polynomial over ℚ: exponent tuple → nonzero Fraction."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Mapping[Exponents, Any]] = None) -> None:
        self.n = n
        self.terms: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise AmbientMismatch(f"term {exps} does not live in {n} variables")
            value = Fraction(coeff)
            if value:
                self.terms[exps] = self.terms.get(exps, Fraction(0)) + value
                if not self.terms[exps]:
                    del self.terms[exps]

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value: Any) -> "Polynomial":
        return cls(n, {(0,) * n: value})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Any = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @classmethod
    def variable(cls, n: int, index: int) -> "Polynomial":
        exps = [0] * n
        exps[index - 1] = 1
        return cls(n, {tuple(exps): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: "Polynomial") -> None:
        if self.n != other.n:
            raise AmbientMismatch(f"polynomials live in {self.n} and {other.n} variables")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = result.get(exps, Fraction(0)) + coeff
            if value:
                result[exps] = value
            else:
                result.pop(exps, None)
        return Polynomial(self.n, result)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Any) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                result[exps] = result.get(exps, Fraction(0)) + c1 * c2
        return Polynomial(self.n, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "Polynomial":
        result = Polynomial.constant(self.n, 1)
        for _ in range(power):
            result = result * self
        return result

    def scale(self, factor: Any) -> "Polynomial":
        factor = Fraction(factor)
        return Polynomial(self.n, {e: c * factor for e, c in self.terms.items()})

    def mul_term(self, exps: Exponents, coeff: Fraction) -> "Polynomial":
        return Polynomial(
            self.n, {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()}
        )

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def sorted_terms(self, order: TermOrder) -> List[Tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def leading_term(self, order: TermOrder) -> Tuple[Exponents, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def leading_monomial(self, order: TermOrder) -> Exponents:
        return self.leading_term(order)[0]

    def monic(self, order: TermOrder) -> "Polynomial":
        if not self.terms:
            return self
        _, coeff = self.leading_term(order)
        return self.scale(1 / coeff)

    def weighted_degree(self, exps: Exponents, weights: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(weights, exps))

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        weights = weights or (1,) * self.n
        return len({self.weighted_degree(e, weights) for e in self.terms}) <= 1

    def to_text(self, order: Optional[TermOrder] = None) -> str:
        if not self.terms:
            return "0"
        order = order or TermOrder.degrevlex(self.n)
        pieces: List[str] = []
        for exps, coeff in self.sorted_terms(order):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps, start=1) if e
            )
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            pieces.append(f"{sign} {body}")
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, n: int) -> "Polynomial":
        """Parse ``c*x1^a1*...`` terms joined by ``+``/``-``; rationals as ``p/q``."""
        cleaned = (text or "").replace(" ", "")
        if not cleaned:
            raise InputFormatError("empty polynomial")
        terms: Dict[Exponents, Fraction] = {}
        for chunk in _TERM_SPLIT_RE.split(cleaned):
            if not chunk:
                continue
            sign = Fraction(1)
            if chunk[0] in "+-":
                sign = Fraction(-1) if chunk[0] == "-" else Fraction(1)
                chunk = chunk[1:]
            if not chunk:
                raise InputFormatError(f"dangling sign in {text!r}")
            coeff = sign
            exps = [0] * n
            for factor in chunk.split("*"):
                if _COEFF_RE.match(factor):
                    coeff *= Fraction(factor)
                    continue
                match = _VAR_RE.match(factor)
                if not match:
                    raise InputFormatError(f"bad factor {factor!r} in {text!r}")
                index = int(match.group(1))
                if not 1 <= index <= n:
                    raise InputFormatError(f"variable x{index} outside 1..{n}")
                exps[index - 1] += int(match.group(2) or 1)
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return cls(n, terms)


def parse_ideal_text(text: str, n: Optional[int] = None) -> Tuple[int, List[Polynomial]]:
    """Line-separated polynomials; blank lines and ``#`` comments are skipped.

    Without ``n`` the ambient is the largest variable index mentioned.
    """
    lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise InputFormatError("no polynomials found")
    if n is None:
        indices = [int(m) for line in lines for m in re.findall(r"x(\d+)", line)]
        n = max(indices, default=1)
    return n, [Polynomial.parse(line, n) for line in lines]


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Gröbner basis: monic, interreduced, sorted by leading term descending."""

    generators: Tuple[Polynomial, ...]
    order: TermOrder
    pairs_processed: int = field(default=0, compare=False)

    @property
    def n(self) -> int:
        return self.order.n

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self) -> List[Exponents]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order.to_dict(),
            "generators": [g.to_text(self.order) for g in self.generators],
            "unit": self.is_unit,
        }


@dataclass(frozen=True)
class FlatFamilyReport:
    """Endpoints of the family hom_ω(I) over k[t]."""

    weights: Tuple[int, ...]
    generic_fiber_matches: bool
    special_fiber_matches: bool
    basis_size: int

    @property
    def flat(self) -> bool:
        return self.generic_fiber_matches and self.special_fiber_matches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "weights": list(self.weights),
            "t=1": self.generic_fiber_matches,
            "t=0": self.special_fiber_matches,
            "basis_size": self.basis_size,
        }


@dataclass(frozen=True)
class DeformationReport:
    """What the initial ideal of I remembers about the connectedness of I."""

    order: TermOrder
    initial_ideal: MonomialIdeal
    radical: MonomialIdeal
    complex: SimplicialComplex
    dim_match: bool
    pure: bool
    strongly_connected: bool
    is_cm_of_initial: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "order": self.order.to_dict(),
            "initial_ideal": [g.to_text() for g in self.initial_ideal.generators],
            "radical": [g.to_text() for g in self.radical.generators],
            "complex": self.complex.to_dict(),
            "dim_match": self.dim_match,
            "pure": self.pure,
            "strongly_connected": self.strongly_connected,
            "is_CM_of_initial": self.is_cm_of_initial,
        }
